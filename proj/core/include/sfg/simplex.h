// Copyright 2026 The scalefree-games Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SFG_SIMPLEX_H_
#define SFG_SIMPLEX_H_

#include <span>
#include <vector>

namespace sfg {

// Absolute tolerance on |sum(weights) - 1| accepted by SimplexVector.
inline constexpr double kSimplexSumTol = 1e-12;

// A probability distribution over actions: nonnegative weights summing to 1
// within kSimplexSumTol. The universal strategy type.
class SimplexVector {
 public:
  SimplexVector() = default;
  // Validates the invariants; throws std::invalid_argument on violation.
  explicit SimplexVector(std::vector<double> weights);

  static SimplexVector Uniform(int dim);
  static SimplexVector Pure(int dim, int action);

  int dim() const { return static_cast<int>(w_.size()); }
  double operator[](int k) const { return w_[k]; }
  const std::vector<double>& weights() const { return w_; }
  std::span<const double> span() const { return w_; }

 private:
  std::vector<double> w_;
};

// exp(eta * scores(a)) / sum_b exp(eta * scores(b)), computed after
// subtracting max(scores). eta may be +infinity, which only arises when all
// scores are equal (all observed gradients so far were zero); in that case
// the uniform distribution is returned. Unequal scores with eta = infinity
// indicate a driver bug and throw std::logic_error.
SimplexVector SoftmaxWeighted(std::span<const double> scores, double eta);

// Small dense-vector helpers shared by the learners and metrics.
double Dot(std::span<const double> a, std::span<const double> b);
double L1Norm(std::span<const double> v);
double LInfNorm(std::span<const double> v);
double L1Distance(std::span<const double> a, std::span<const double> b);
double LInfDistance(std::span<const double> a, std::span<const double> b);

}  // namespace sfg

#endif  // SFG_SIMPLEX_H_

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

#include "sfg/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sfg {

SimplexVector::SimplexVector(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) {
    throw std::invalid_argument("SimplexVector: empty weight vector");
  }
  double sum = 0.0;
  for (double w : w_) {
    if (!(w >= 0.0)) {  // also rejects NaN
      throw std::invalid_argument("SimplexVector: negative or NaN weight");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSimplexSumTol) {
    throw std::invalid_argument("SimplexVector: weights do not sum to 1");
  }
}

SimplexVector SimplexVector::Uniform(int dim) {
  if (dim <= 0) throw std::invalid_argument("SimplexVector::Uniform: dim <= 0");
  return SimplexVector(std::vector<double>(dim, 1.0 / dim));
}

SimplexVector SimplexVector::Pure(int dim, int action) {
  if (dim <= 0 || action < 0 || action >= dim) {
    throw std::invalid_argument("SimplexVector::Pure: bad action index");
  }
  std::vector<double> w(dim, 0.0);
  w[action] = 1.0;
  return SimplexVector(std::move(w));
}

SimplexVector SoftmaxWeighted(std::span<const double> scores, double eta) {
  if (scores.empty()) throw std::invalid_argument("SoftmaxWeighted: empty scores");
  for (double s : scores) {
    if (!std::isfinite(s)) {
      throw std::invalid_argument("SoftmaxWeighted: non-finite score");
    }
  }
  const int m = static_cast<int>(scores.size());
  if (std::isinf(eta)) {
    // Infinite rate only arises before any nonzero gradient has been seen,
    // which forces all cumulative scores equal; anything else is a driver bug.
    const double lo = *std::min_element(scores.begin(), scores.end());
    const double hi = *std::max_element(scores.begin(), scores.end());
    if (hi - lo > 1e-12) {
      throw std::logic_error("SoftmaxWeighted: eta = infinity with unequal scores");
    }
    return SimplexVector::Uniform(m);
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("SoftmaxWeighted: eta must be positive or infinity");
  }
  const double top = *std::max_element(scores.begin(), scores.end());
  std::vector<double> w(m);
  double sum = 0.0;
  for (int a = 0; a < m; ++a) {
    w[a] = std::exp(eta * (scores[a] - top));
    sum += w[a];
  }
  for (int a = 0; a < m; ++a) w[a] /= sum;
  return SimplexVector(std::move(w));
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double L1Norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

double LInfNorm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

double L1Distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

double LInfDistance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::abs(a[i] - b[i]));
  return s;
}

}  // namespace sfg

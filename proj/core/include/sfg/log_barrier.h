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

#ifndef SFG_LOG_BARRIER_H_
#define SFG_LOG_BARRIER_H_

#include <span>

#include "sfg/simplex.h"

namespace sfg {

struct LogBarrierSolution {
  SimplexVector point;
  double lambda;  // dual multiplier of the simplex constraint
};

// Exact maximizer of <y, scores> - phi(y)/eta over the simplex, where
// phi(y) = -sum_k log y(k). The optimum satisfies
//   y(k) = 1 / (eta (lambda - scores(k)))
// for the unique lambda in [max(scores) + 1/eta, max(scores) + m/eta] with
// sum_k y(k) = 1, found by safeguarded Newton on lambda (bisection step
// whenever Newton would leave the bracket). Converges to
// |sum y - 1| <= 1e-13 within 200 iterations or throws std::runtime_error.
//
// eta = infinity returns the uniform distribution; it only arises before any
// nonzero gradient has been observed, so all scores must be (near) equal.
LogBarrierSolution LogBarrierArgmaxWithDual(std::span<const double> scores, double eta);
SimplexVector LogBarrierArgmax(std::span<const double> scores, double eta);

// Local norm of (other - base) at base with respect to the log barrier:
//   sqrt(sum_k ((other(k) - base(k)) / base(k))^2).
// base must be strictly positive.
double LogBarrierLocalNorm(const SimplexVector& base, const SimplexVector& other);

}  // namespace sfg

#endif  // SFG_LOG_BARRIER_H_

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

#include "sfg/log_barrier.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sfg {

LogBarrierSolution LogBarrierArgmaxWithDual(std::span<const double> scores, double eta) {
  if (scores.empty()) throw std::invalid_argument("LogBarrierArgmax: empty scores");
  for (double s : scores) {
    if (!std::isfinite(s)) {
      throw std::invalid_argument("LogBarrierArgmax: non-finite score");
    }
  }
  const int m = static_cast<int>(scores.size());
  if (std::isinf(eta)) {
    const double lo = *std::min_element(scores.begin(), scores.end());
    const double hi = *std::max_element(scores.begin(), scores.end());
    if (hi - lo > 1e-12) {
      throw std::logic_error("LogBarrierArgmax: eta = infinity with unequal scores");
    }
    return {SimplexVector::Uniform(m), std::numeric_limits<double>::infinity()};
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("LogBarrierArgmax: eta must be positive or infinity");
  }

  // Work with shifted scores s(k) = scores(k) - max(scores) <= 0, so the
  // bracket becomes [1/eta, m/eta] and the solve is shift-invariant.
  const double top = *std::max_element(scores.begin(), scores.end());
  std::vector<double> s(m);
  for (int k = 0; k < m; ++k) s[k] = scores[k] - top;

  // f(t) = sum_k 1/(eta (t - s(k))) - 1 is strictly decreasing and convex on
  // (0, inf) with f(1/eta) >= 0 and f(m/eta) <= 0.
  const auto f_and_df = [&](double t, double* df) {
    double f = -1.0;
    double d = 0.0;
    for (int k = 0; k < m; ++k) {
      const double denom = eta * (t - s[k]);
      f += 1.0 / denom;
      d -= eta / (denom * denom);
    }
    *df = d;
    return f;
  };

  double lo = 1.0 / eta;
  double hi = static_cast<double>(m) / eta;
  double t = lo;
  double df = 0.0;
  double f = f_and_df(t, &df);
  constexpr double kTol = 1e-13;
  constexpr int kMaxIter = 200;
  bool converged = std::abs(f) <= kTol;
  for (int iter = 0; iter < kMaxIter && !converged; ++iter) {
    if (f > 0.0) lo = t; else hi = t;
    double next = t - f / df;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    t = next;
    f = f_and_df(t, &df);
    converged = std::abs(f) <= kTol;
  }
  if (!converged) {
    throw std::runtime_error("LogBarrierArgmax: root finder failed to converge");
  }

  std::vector<double> y(m);
  double sum = 0.0;
  for (int k = 0; k < m; ++k) {
    y[k] = 1.0 / (eta * (t - s[k]));
    sum += y[k];
  }
  for (int k = 0; k < m; ++k) y[k] /= sum;
  return {SimplexVector(std::move(y)), t + top};
}

SimplexVector LogBarrierArgmax(std::span<const double> scores, double eta) {
  return LogBarrierArgmaxWithDual(scores, eta).point;
}

double LogBarrierLocalNorm(const SimplexVector& base, const SimplexVector& other) {
  if (base.dim() != other.dim()) {
    throw std::invalid_argument("LogBarrierLocalNorm: dimension mismatch");
  }
  double sum = 0.0;
  for (int k = 0; k < base.dim(); ++k) {
    if (base[k] <= 0.0) {
      throw std::invalid_argument("LogBarrierLocalNorm: base must be strictly positive");
    }
    const double r = (other[k] - base[k]) / base[k];
    sum += r * r;
  }
  return std::sqrt(sum);
}

}  // namespace sfg

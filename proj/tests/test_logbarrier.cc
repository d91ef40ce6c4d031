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

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sfg/log_barrier.h"
#include "sfg/rng.h"

namespace sfg {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Independent oracle: maximize <y, G> + (log y1 + log y2)/eta over the
// 1-simplex by dense grid search.
double GridSearchArgmaxFirstCoord(double g0, double g1, double eta) {
  double best_val = -kInf, best_y = 0.5;
  for (int k = 1; k <= 9999; ++k) {
    const double y = k * 1e-4;
    const double val = y * g0 + (1 - y) * g1 + (std::log(y) + std::log(1 - y)) / eta;
    if (val > best_val) {
      best_val = val;
      best_y = y;
    }
  }
  return best_y;
}

TEST_CASE("zero scores give uniform at any finite rate") {
  for (double eta : {0.1, 1.0, 250.0}) {
    const SimplexVector y = LogBarrierArgmax(std::vector<double>{0, 0, 0, 0}, eta);
    for (int k = 0; k < 4; ++k) CHECK(y[k] == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("golden-ratio closed form for G=(1,0), eta=1") {
  // lambda solves lambda^2 - 3 lambda + 1 = 0 above the bracket floor:
  // lambda = (3 + sqrt(5)) / 2; y = (1/(lambda-1), 1/lambda).
  const LogBarrierSolution sol =
      LogBarrierArgmaxWithDual(std::vector<double>{1, 0}, 1.0);
  CHECK(std::abs(sol.lambda - (3 + std::sqrt(5.0)) / 2) <= 1e-9);
  CHECK(std::abs(sol.point[0] - 0.61803398874989484) <= 1e-9);
  CHECK(std::abs(sol.point[1] - 0.38196601125010515) <= 1e-9);
}

TEST_CASE("matches grid-search oracle on the 1-simplex") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const double g0 = rng.Uniform(-2, 2);
    const double g1 = rng.Uniform(-2, 2);
    const double eta = rng.Uniform(0.2, 5.0);
    const SimplexVector y = LogBarrierArgmax(std::vector<double>{g0, g1}, eta);
    CHECK(std::abs(y[0] - GridSearchArgmaxFirstCoord(g0, g1, eta)) <= 1e-4);
  }
}

TEST_CASE("KKT residual on random problems") {
  Rng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 + rng.UniformInt(9);
    std::vector<double> scores(m);
    const double spread = std::pow(10.0, rng.Uniform(-3, 3));
    for (double& s : scores) s = rng.Uniform(-spread, spread);
    const double eta = std::pow(10.0, rng.Uniform(-3, 3));
    const LogBarrierSolution sol = LogBarrierArgmaxWithDual(scores, eta);
    double sum = 0.0, residual = 0.0;
    for (int k = 0; k < m; ++k) {
      CHECK(sol.point[k] > 0.0);
      sum += sol.point[k];
      residual = std::max(residual,
                          std::abs(scores[k] + 1.0 / (eta * sol.point[k]) - sol.lambda));
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    CHECK(residual <= 1e-9 * (1.0 + std::abs(sol.lambda)));
  }
}

TEST_CASE("dual stays inside the analytic bracket") {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + rng.UniformInt(5);
    std::vector<double> scores(m);
    for (double& s : scores) s = rng.Uniform(-1, 1);
    const double eta = rng.Uniform(0.05, 20.0);
    const LogBarrierSolution sol = LogBarrierArgmaxWithDual(scores, eta);
    double max_g = scores[0];
    for (double s : scores) max_g = std::max(max_g, s);
    CHECK(sol.lambda >= max_g + 1.0 / eta - 1e-12);
    CHECK(sol.lambda <= max_g + m / eta + 1e-12);
  }
}

TEST_CASE("shift invariance") {
  const std::vector<double> scores = {0.4, -1.0, 0.9};
  const SimplexVector a = LogBarrierArgmax(scores, 2.0);
  std::vector<double> shifted = scores;
  for (double& s : shifted) s += 123.0;
  const SimplexVector b = LogBarrierArgmax(shifted, 2.0);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-12);
}

TEST_CASE("infinite rate returns uniform only for equal scores") {
  const SimplexVector y = LogBarrierArgmax(std::vector<double>{0, 0}, kInf);
  CHECK(y[0] == doctest::Approx(0.5));
  CHECK_THROWS_AS(LogBarrierArgmax(std::vector<double>{1, 0}, kInf), std::logic_error);
  CHECK_THROWS_AS(LogBarrierArgmax(std::vector<double>{1, kInf}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("local norm diagnostic") {
  const SimplexVector base = SimplexVector::Uniform(2);
  CHECK(LogBarrierLocalNorm(base, base) == doctest::Approx(0.0));
  CHECK(LogBarrierLocalNorm(base, SimplexVector({0.6, 0.4})) ==
        doctest::Approx(0.28284271247461901).epsilon(1e-10));
  CHECK(LogBarrierLocalNorm(base, SimplexVector({0.75, 0.25})) ==
        doctest::Approx(0.70710678118654752).epsilon(1e-10));
  CHECK_THROWS_AS(LogBarrierLocalNorm(SimplexVector::Pure(2, 0), base),
                  std::invalid_argument);
}

}  // namespace
}  // namespace sfg

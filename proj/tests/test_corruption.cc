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
#include <vector>

#include "doctest.h"
#include "sfg/corruption.h"
#include "sfg/simplex.h"

namespace sfg {
namespace {

TEST_CASE("inactive plan is the identity") {
  CorruptionPlan plan = CorruptionPlan::None();
  const SimplexVector x = SimplexVector({0.3, 0.7});
  const SimplexVector out = plan.DeviateStrategy(x, 1);
  CHECK(out[0] == x[0]);
  const std::vector<double> g = plan.CorruptUtility(std::vector<double>{1.0, -2.0}, 1);
  CHECK(g == std::vector<double>{1.0, -2.0});
  CHECK(plan.spent_strategy() == 0.0);
  CHECK(plan.spent_utility() == 0.0);
}

TEST_CASE("front-loaded push to pure spends l1 distance") {
  CorruptionPlan plan =
      CorruptionPlan::PushToPure(2.0, 0, ScheduleKind::kFrontLoaded, 1);
  const SimplexVector out = plan.DeviateStrategy(SimplexVector::Uniform(2), 1);
  CHECK(out[0] == doctest::Approx(1.0));
  CHECK(out[1] == doctest::Approx(0.0));
  CHECK(plan.spent_strategy() == doctest::Approx(1.0));
  // Round 2 is outside the schedule: identity.
  const SimplexVector out2 = plan.DeviateStrategy(SimplexVector::Uniform(2), 2);
  CHECK(out2[0] == doctest::Approx(0.5));
  CHECK(plan.spent_strategy() == doctest::Approx(1.0));
}

TEST_CASE("partial budget interpolates halfway") {
  // Remaining budget 0.5, full swing toward the pure target costs 1:
  // spend exactly 0.5 by moving halfway.
  CorruptionPlan plan =
      CorruptionPlan::PushToPure(0.5, 0, ScheduleKind::kFrontLoaded, 10);
  const SimplexVector out = plan.DeviateStrategy(SimplexVector::Uniform(2), 1);
  CHECK(out[0] == doctest::Approx(0.75));
  CHECK(out[1] == doctest::Approx(0.25));
  CHECK(plan.spent_strategy() == doctest::Approx(0.5));
  // Budget now exhausted: later active rounds are the identity.
  const SimplexVector out2 = plan.DeviateStrategy(SimplexVector::Uniform(2), 2);
  CHECK(out2[0] == doctest::Approx(0.5));
}

TEST_CASE("deviation output is always a simplex point") {
  CorruptionPlan plan =
      CorruptionPlan::PushToPure(3.0, 1, ScheduleKind::kPeriodic, 2);
  for (long t = 1; t <= 20; ++t) {
    const SimplexVector x =
        plan.DeviateStrategy(SimplexVector({0.2, 0.3, 0.5}), t);
    double sum = 0;
    for (int k = 0; k < 3; ++k) {
      CHECK(x[k] >= 0.0);
      sum += x[k];
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
  CHECK(plan.spent_strategy() <= 3.0 + 1e-12);
}

TEST_CASE("utility spike and truncation") {
  SUBCASE("constant offset spends its magnitude") {
    CorruptionPlan plan = CorruptionPlan::UtilitySpike(
        10.0, 3.0, UtilityShape::kConstantOffset, ScheduleKind::kFrontLoaded, 1);
    const std::vector<double> g =
        plan.CorruptUtility(std::vector<double>{1, 0, -1}, 1);
    CHECK(g == std::vector<double>{4, 3, 2});
    CHECK(plan.spent_utility() == doctest::Approx(3.0));
  }
  SUBCASE("truncated to remaining budget") {
    CorruptionPlan plan = CorruptionPlan::UtilitySpike(
        1.0, 3.0, UtilityShape::kConstantOffset, ScheduleKind::kFrontLoaded, 5);
    const std::vector<double> g = plan.CorruptUtility(std::vector<double>{0, 0}, 1);
    CHECK(g == std::vector<double>{1, 1});
    // Nothing left for round 2.
    const std::vector<double> g2 = plan.CorruptUtility(std::vector<double>{0, 0}, 2);
    CHECK(g2 == std::vector<double>{0, 0});
    CHECK(plan.spent_utility() == doctest::Approx(1.0));
  }
  SUBCASE("sign-flip spike opposes the largest coordinate") {
    CorruptionPlan plan = CorruptionPlan::UtilitySpike(
        10.0, 3.0, UtilityShape::kSignFlipSpike, ScheduleKind::kFrontLoaded, 1);
    const std::vector<double> g =
        plan.CorruptUtility(std::vector<double>{2, -1}, 1);
    CHECK(g[0] == doctest::Approx(-1.0));  // 2 - 3
    CHECK(g[1] == doctest::Approx(-1.0));
  }
}

TEST_CASE("spent totals match ledger recomputation") {
  CorruptionPlan plan = CorruptionPlan::Combined(
      1.7, 0, 2.3, 0.4, UtilityShape::kConstantOffset, ScheduleKind::kPeriodic, 3);
  double strategy_total = 0, utility_total = 0;
  for (long t = 1; t <= 50; ++t) {
    const SimplexVector prescribed({0.4, 0.6});
    const SimplexVector played = plan.DeviateStrategy(prescribed, t);
    strategy_total += L1Distance(played.span(), prescribed.span());
    const std::vector<double> true_g = {0.1, -0.2};
    const std::vector<double> obs = plan.CorruptUtility(true_g, t);
    utility_total += LInfDistance(obs, true_g);
  }
  CHECK(std::abs(plan.spent_strategy() - strategy_total) <= 1e-12);
  CHECK(std::abs(plan.spent_utility() - utility_total) <= 1e-12);
  CHECK(plan.spent_strategy() <= 1.7 + 1e-12);
  CHECK(plan.spent_utility() <= 2.3 + 1e-12);
}

TEST_CASE("custom schedule") {
  CorruptionPlan plan = CorruptionPlan::PushToPure(10.0, 0, ScheduleKind::kCustom, 0);
  plan.set_custom_rounds({2, 5});
  CHECK_FALSE(plan.ActiveAt(1));
  CHECK(plan.ActiveAt(2));
  CHECK_FALSE(plan.ActiveAt(3));
  CHECK(plan.ActiveAt(5));
}

}  // namespace
}  // namespace sfg

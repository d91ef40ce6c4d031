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

#ifndef SFG_CORRUPTION_H_
#define SFG_CORRUPTION_H_

#include <span>
#include <vector>

#include "sfg/simplex.h"

namespace sfg {

// When the adversary is active.
enum class ScheduleKind { kNone, kFrontLoaded, kPeriodic, kCustom };

// How observed utility vectors are perturbed on active rounds.
//   kSignFlipSpike: push the currently largest-|value| coordinate toward 0
//     and past it (opposing its sign).
//   kConstantOffset: add a constant to every coordinate.
enum class UtilityShape { kSignFlipSpike, kConstantOffset };

// Budgeted adversary for one player: strategy deviations charged in l1,
// utility corruptions charged in l-infinity. Budgets are enforced by
// truncation — a deviation that would overspend is scaled down to spend
// exactly the remainder.
class CorruptionPlan {
 public:
  CorruptionPlan() = default;  // inactive plan: identity everywhere

  static CorruptionPlan None();
  // Push the prescribed strategy toward the pure target action.
  static CorruptionPlan PushToPure(double strategy_budget, int target_action,
                                   ScheduleKind schedule, int schedule_param);
  static CorruptionPlan UtilitySpike(double utility_budget, double spike_magnitude,
                                     UtilityShape shape, ScheduleKind schedule,
                                     int schedule_param);
  // Combined strategy + utility adversary.
  static CorruptionPlan Combined(double strategy_budget, int target_action,
                                 double utility_budget, double spike_magnitude,
                                 UtilityShape shape, ScheduleKind schedule,
                                 int schedule_param);

  bool ActiveAt(long t) const;  // 1-based round index

  // Returns the played strategy x^t; charges ||x^t - prescribed||_1.
  SimplexVector DeviateStrategy(const SimplexVector& prescribed, long t);

  // Returns the observed gradient; charges ||observed - true_vec||_inf.
  std::vector<double> CorruptUtility(std::span<const double> true_vec, long t);

  double strategy_budget() const { return strategy_budget_; }
  double utility_budget() const { return utility_budget_; }
  double spent_strategy() const { return spent_strategy_; }
  double spent_utility() const { return spent_utility_; }
  bool is_active() const {
    return strategy_budget_ > 0.0 || utility_budget_ > 0.0;
  }
  void set_custom_rounds(std::vector<long> rounds);

 private:
  double strategy_budget_ = 0.0;
  double utility_budget_ = 0.0;
  ScheduleKind schedule_ = ScheduleKind::kNone;
  int schedule_param_ = 0;
  std::vector<long> custom_rounds_;
  int target_action_ = 0;
  double spike_magnitude_ = 0.0;
  UtilityShape shape_ = UtilityShape::kSignFlipSpike;
  double spent_strategy_ = 0.0;
  double spent_utility_ = 0.0;
};

}  // namespace sfg

#endif  // SFG_CORRUPTION_H_

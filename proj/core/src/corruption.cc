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

#include "sfg/corruption.h"

#include <algorithm>
#include <cmath>

namespace sfg {

CorruptionPlan CorruptionPlan::None() { return CorruptionPlan(); }

CorruptionPlan CorruptionPlan::PushToPure(double strategy_budget, int target_action,
                                          ScheduleKind schedule, int schedule_param) {
  CorruptionPlan p;
  p.strategy_budget_ = strategy_budget;
  p.target_action_ = target_action;
  p.schedule_ = schedule;
  p.schedule_param_ = schedule_param;
  return p;
}

CorruptionPlan CorruptionPlan::UtilitySpike(double utility_budget, double spike_magnitude,
                                            UtilityShape shape, ScheduleKind schedule,
                                            int schedule_param) {
  CorruptionPlan p;
  p.utility_budget_ = utility_budget;
  p.spike_magnitude_ = spike_magnitude;
  p.shape_ = shape;
  p.schedule_ = schedule;
  p.schedule_param_ = schedule_param;
  return p;
}

CorruptionPlan CorruptionPlan::Combined(double strategy_budget, int target_action,
                                        double utility_budget, double spike_magnitude,
                                        UtilityShape shape, ScheduleKind schedule,
                                        int schedule_param) {
  CorruptionPlan p;
  p.strategy_budget_ = strategy_budget;
  p.target_action_ = target_action;
  p.utility_budget_ = utility_budget;
  p.spike_magnitude_ = spike_magnitude;
  p.shape_ = shape;
  p.schedule_ = schedule;
  p.schedule_param_ = schedule_param;
  return p;
}

void CorruptionPlan::set_custom_rounds(std::vector<long> rounds) {
  schedule_ = ScheduleKind::kCustom;
  custom_rounds_ = std::move(rounds);
  std::sort(custom_rounds_.begin(), custom_rounds_.end());
}

bool CorruptionPlan::ActiveAt(long t) const {
  switch (schedule_) {
    case ScheduleKind::kNone:
      return false;
    case ScheduleKind::kFrontLoaded:
      return t <= schedule_param_;
    case ScheduleKind::kPeriodic:
      return schedule_param_ > 0 && t % schedule_param_ == 0;
    case ScheduleKind::kCustom:
      return std::binary_search(custom_rounds_.begin(), custom_rounds_.end(), t);
  }
  return false;
}

SimplexVector CorruptionPlan::DeviateStrategy(const SimplexVector& prescribed, long t) {
  const double remaining = strategy_budget_ - spent_strategy_;
  if (!ActiveAt(t) || remaining <= 0.0) return prescribed;
  const int m = prescribed.dim();
  const int target = std::min(target_action_, m - 1);
  std::vector<double> pure(m, 0.0);
  pure[target] = 1.0;
  const double full_swing = L1Distance(pure, prescribed.span());
  if (full_swing == 0.0) return prescribed;
  // Convex interpolation toward the prescription spends exactly
  // theta * full_swing in l1 (the l1 distance is linear along the segment).
  const double theta = std::min(1.0, remaining / full_swing);
  std::vector<double> w(m);
  for (int a = 0; a < m; ++a) w[a] = prescribed[a] + theta * (pure[a] - prescribed[a]);
  spent_strategy_ += theta * full_swing;
  return SimplexVector(std::move(w));
}

std::vector<double> CorruptionPlan::CorruptUtility(std::span<const double> true_vec,
                                                   long t) {
  std::vector<double> out(true_vec.begin(), true_vec.end());
  const double remaining = utility_budget_ - spent_utility_;
  if (!ActiveAt(t) || remaining <= 0.0 || spike_magnitude_ <= 0.0) return out;
  const double magnitude = std::min(spike_magnitude_, remaining);
  if (shape_ == UtilityShape::kConstantOffset) {
    for (double& v : out) v += magnitude;
  } else {
    std::size_t k = 0;
    for (std::size_t j = 1; j < out.size(); ++j) {
      if (std::abs(out[j]) > std::abs(out[k])) k = j;
    }
    out[k] -= (out[k] >= 0.0 ? 1.0 : -1.0) * magnitude;
  }
  spent_utility_ += magnitude;
  return out;
}

}  // namespace sfg

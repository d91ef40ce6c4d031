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

#ifndef SFG_RUN_H_
#define SFG_RUN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "sfg/corruption.h"
#include "sfg/games.h"
#include "sfg/hedge.h"
#include "sfg/metrics.h"
#include "sfg/swap.h"

namespace sfg {

enum class Dynamics {
  kOptHedgeShared,   // Hedge with the shared path-length rate
  kOptHedgeNoComm,   // Hedge with the no-communication rate
  kAlgorithm1,       // clipped OFTRL-log-barrier swap-regret dynamics
  kAdaHedgeBaseline  // per-expert scale-free Hedge baseline (sqrt(T) rate)
};

std::string DynamicsName(Dynamics d);
Dynamics ParseDynamics(const std::string& name);

struct RunConfig {
  Game game = ZeroSumGame::MatchingPennies();
  long horizon = 1000;
  Dynamics dynamics = Dynamics::kOptHedgeShared;
  std::uint64_t seed = 0;
  CorruptionPlan x_plan;  // zero-sum only
  CorruptionPlan y_plan;  // zero-sum only
  std::vector<double> scale_factors;
  long cadence = 0;   // 0: max(1, horizon / 1000)
  double gamma = 0;   // 0: 8n
  bool clipped_rate_paths = true;  // rate path lengths over clipped gradients
  std::string out_dir;

  long EffectiveCadence() const {
    return cadence > 0 ? cadence : std::max(1L, horizon / 1000);
  }
};

// Config JSON schema is documented in docs/schema.md.
RunConfig ParseRunConfigJson(const std::string& text);
RunConfig LoadRunConfigFile(const std::string& path);

// ---------------------------------------------------------------------------
// Zero-sum driver

struct ZeroSumResult {
  // Full per-round trajectories (both sides, prescribed and played, true and
  // observed gradients).
  RegretLedger ledger_x;  // gain sense
  RegretLedger ledger_y;  // loss sense
  // Prefix regrets after each round t = 1..T.
  std::vector<double> reg_x_prefix, reg_y_prefix;          // played vs true
  std::vector<double> reg_x_obs_prefix, reg_y_obs_prefix;  // played vs observed
  std::vector<double> eta_x, eta_y;  // rate used at each round
  std::vector<long> cadence_ts;
  std::vector<double> exploitability_cadence;  // of running average play
  TheoreticalBounds bounds;
  bool bound_satisfied_every_prefix = false;  // horizon-independent constant bound
  double max_reg_x = 0.0, max_reg_y = 0.0;    // max over prefixes
  bool degenerate_zero_range = false;
  double final_exploitability = 0.0;
  std::string csv;
};

ZeroSumResult RunZeroSum(const RunConfig& config);

// ---------------------------------------------------------------------------
// General-sum driver

// Invariant bookkeeping accumulated while Algorithm 1 runs. The clipping
// bounds are checked online; the jump-set bounds and the stability
// diagnostic are finalized once the jump set is complete.
struct SwapInvariantStats {
  long clip_norm_violations = 0;    // ||clipped u||_inf <= 2 B^t
  long bu_violations = 0;           // B^{t+1} <= 2 U^t
  long stationarity_violations = 0; // ||Q^T x - x||_1 <= 1e-10
  long stability_violations = 0;    // sum_a local-norm step <= 1/2 on I-rounds
  bool jump_count_ok = true;        // #jumps <= floor(log2(2 U^T / omega)) + 1
  bool jump_cost_ok = true;         // bounded clipped-norm sums over J
  std::vector<double> sum_clip_inf_jump;     // per player, over t in J
  std::vector<double> sum_clip_inf_sq_jump;  // per player, over t in J
  bool AllClean() const {
    return clip_norm_violations == 0 && bu_violations == 0 &&
           stationarity_violations == 0 && stability_violations == 0 &&
           jump_count_ok && jump_cost_ok;
  }
};

// Two-phase round loop of Algorithm 1 over n players with one global clip
// state. Utilities are supplied by the caller, so the same driver serves
// game-driven runs and crafted gradient streams.
class GeneralSumDriver {
 public:
  GeneralSumDriver(std::vector<int> action_counts, long horizon, double gamma,
                   bool clipped_rate_paths);

  // Act phase: every player's strategy for the upcoming round.
  const std::vector<SimplexVector>& BeginRound();
  // Feed phase: one (unclipped) utility vector per player.
  void FinishRound(const std::vector<std::vector<double>>& utils);

  // Completes the jump-set dependent checks. u_max_reference is the a-priori
  // utility bound (game U_max, or the max norm of a crafted stream).
  void FinalizeInvariants(double u_max_reference);

  const std::vector<SimplexVector>& strategies() const { return strategies_; }
  const std::vector<SwapPlayer>& players() const { return players_; }
  const SharedBoard& board() const { return board_; }
  const SwapInvariantStats& stats() const { return stats_; }
  const std::vector<double>& eta(int player) const { return eta_[player]; }
  const std::vector<bool>& jump_flags() const { return jump_flags_; }
  // Per-round max-over-players of sum_a local-norm(y_a^t, y_a^{t+1});
  // entry t-1 becomes available after round t+1's act phase.
  const std::vector<double>& stability_sums() const { return stability_sums_; }
  long round() const { return t_; }

 private:
  long horizon_;
  double gamma_;
  bool clipped_rate_paths_;
  std::vector<SwapPlayer> players_;
  SharedBoard board_;
  std::vector<SimplexVector> strategies_;
  std::vector<std::vector<SimplexVector>> prev_expert_points_;
  std::vector<std::vector<double>> eta_;  // [player][round]
  std::vector<bool> jump_flags_;
  std::vector<double> stability_sums_;
  SwapInvariantStats stats_;
  long t_ = 0;
  bool in_round_ = false;
};

struct GeneralSumResult {
  std::vector<Trajectory> plays;          // [player][t]
  std::vector<GradientTrajectory> utils;  // true expected utilities
  std::vector<std::vector<double>> eta;   // [player][t]
  std::vector<int> jump_rounds;           // J'
  double omega = 0.0, b_final = 0.0, u_running_max = 0.0;
  SwapInvariantStats stats;               // Algorithm 1 only
  std::vector<double> swap_regret_final;  // per player
  double ce_gap_final = 0.0;
  std::string csv;
};

GeneralSumResult RunGeneralSum(const RunConfig& config);

// ---------------------------------------------------------------------------
// Scale sweep

struct ScaleSweepResult {
  std::vector<double> scales;
  double max_deviation = 0.0;  // max per-round per-coordinate strategy gap
  bool pass = false;           // max_deviation <= 1e-8
};

ScaleSweepResult RunScaleSweep(const RunConfig& config);

// ---------------------------------------------------------------------------
// Report serialization

// Floats serialized with 17 significant digits.
std::string FormatDouble(double v);

std::string BuildZeroSumSummaryJson(const RunConfig& config, const ZeroSumResult& result,
                                    double wall_seconds);
std::string BuildGeneralSumSummaryJson(const RunConfig& config,
                                       const GeneralSumResult& result,
                                       double wall_seconds);
std::string BuildScaleSweepSummaryJson(const RunConfig& config,
                                       const ScaleSweepResult& result,
                                       double wall_seconds);

void WriteFile(const std::string& path, const std::string& content);

}  // namespace sfg

#endif  // SFG_RUN_H_

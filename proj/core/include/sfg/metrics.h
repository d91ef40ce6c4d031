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

#ifndef SFG_METRICS_H_
#define SFG_METRICS_H_

#include <vector>

#include "sfg/games.h"
#include "sfg/simplex.h"

namespace sfg {

using Trajectory = std::vector<SimplexVector>;
using GradientTrajectory = std::vector<std::vector<double>>;

enum class RegretSense { kGain, kLoss };

struct ExternalRegretResult {
  double value;
  int best_action;  // optimal fixed comparator (a vertex)
};

// Gain sense: max_a sum_t g^t(a) - sum_t <x^t, g^t>.
// Loss sense: sum_t <y^t, l^t> - min_a sum_t l^t(a).
ExternalRegretResult ExternalRegret(const Trajectory& plays,
                                    const GradientTrajectory& grads,
                                    RegretSense sense);

struct SwapRegretResult {
  double value;
  std::vector<int> best_swap;  // row a of the best deterministic swap sends a -> best_swap[a]
};

// Best-swap regret: sum_a max_b S(a,b) - sum_t <x^t, u^t> with
// S(a,b) = sum_t x^t(a) u^t(b). Ties break toward the smallest index.
SwapRegretResult SwapRegret(const Trajectory& plays, const GradientTrajectory& utils);

// Swap regret evaluated at a fixed row-stochastic matrix M (rows index the
// played action): sum_t <x^t, M u^t - u^t>.
double SwapRegretAt(const Trajectory& plays, const GradientTrajectory& utils,
                    const std::vector<std::vector<double>>& swap_matrix);

// Nash gap of an average-play pair: max_i (A y_avg)(i) - min_j (A^T x_avg)(j).
double Exploitability(const ZeroSumGame& game, const SimplexVector& x_avg,
                      const SimplexVector& y_avg);

// max_i SwapRegret(player i) / T; the correlated-equilibrium gap of the
// time-averaged product-play distribution.
double CeGap(const std::vector<Trajectory>& plays_per_player,
             const std::vector<GradientTrajectory>& utils_per_player);

enum class BoundVariant { kHonestZeroSum, kNoCommZeroSum };

struct TheoreticalBounds {
  double bound_x;
  double bound_y;
  double nash_gap_bound;  // (bound_x + bound_y) / T
};

// Closed-form regret-bound values. Honest zero-sum:
//   bound = 8 A_diff sqrt(5 (M + 1) M_side), M_side = max{4, log m / 2^(3/2)}.
// No-communication: (1 + sqrt(A_diff)) sqrt(A_diff) M log(max(m_x, m_y)),
// reported without its hidden constant.
TheoreticalBounds ComputeBounds(double a_diff, int m_x, int m_y, long horizon,
                                BoundVariant variant);

// Per-round records of one corrupted-regime run: played vs prescribed
// strategies and true vs observed (possibly corrupted) gradients.
struct RegretLedger {
  Trajectory played;
  Trajectory prescribed;
  GradientTrajectory true_grads;
  GradientTrajectory observed_grads;
  RegretSense sense = RegretSense::kGain;
};

struct RegretVariantReport {
  double reg_played_true;           // Reg_{x,g}
  double reg_prescribed_true;       // Reg_{xhat,g}
  double reg_played_observed;       // Reg_{x,gtilde}
  double reg_prescribed_observed;   // Reg_{xhat,gtilde}
  double strategy_deviation_total;  // sum_t ||x^t - xhat^t||_1
  double corruption_total;          // sum_t ||g^t - gtilde^t||_inf
  bool deltas_ok;                   // the four pairwise bounds hold
};

// Computes all four regret variants and checks the pairwise bounds
// |Reg_{x,.} - Reg_{xhat,.}| <= A_max * C_hat + 1e-9 and
// |Reg_{.,g} - Reg_{.,gtilde}| <= 2 * C_tilde + 1e-9 with C_hat, C_tilde
// measured from the ledger.
RegretVariantReport RegretVariantDeltas(const RegretLedger& ledger, double a_max);

}  // namespace sfg

#endif  // SFG_METRICS_H_

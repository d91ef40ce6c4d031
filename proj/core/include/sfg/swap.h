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

#ifndef SFG_SWAP_H_
#define SFG_SWAP_H_

#include <span>
#include <vector>

#include "sfg/log_barrier.h"
#include "sfg/path_tracker.h"
#include "sfg/simplex.h"

namespace sfg {

struct ClipUpdateResult {
  double b_next;
  bool jumped;
};

// Doubling-clipping state shared by all players. B starts at 0, becomes the
// first nonzero max gradient norm omega, and afterwards only moves to
// B * 2^k for the smallest k >= 0 with 2^(k+1) B >= max_norm. U tracks the
// running max gradient norm across players.
class ClipState {
 public:
  // Advances one round with max_norm = max_i ||u_i^t||_inf. Returns the new
  // B and whether this round is a jump round (member of J').
  ClipUpdateResult Update(double max_norm);

  double b_current() const { return b_; }       // B^{t+1} after the last Update
  double u_running_max() const { return u_max_; }  // U^t
  double omega() const { return omega_; }
  int rounds() const { return t_; }
  int jump_count() const { return static_cast<int>(jump_rounds_.size()); }
  // 1-based indices of J'.
  const std::vector<int>& jump_rounds() const { return jump_rounds_; }
  // J = J' union {t+1 : t in J'}, clipped to [1, horizon]; I = [T] \ J.
  std::vector<int> ExtendedJumpRounds(int horizon) const;

 private:
  double b_ = 0.0;
  double u_max_ = 0.0;
  double omega_ = 0.0;
  int t_ = 0;
  std::vector<int> jump_rounds_;
};

// (b_t / b_next) * u; the zero vector when b_t = 0 (the first nonzero round
// is clipped away entirely).
std::vector<double> ClipGradient(std::span<const double> u, double b_t, double b_next);

// Shared learning rate of Algorithm 1:
//   eta = min(alpha / sqrt(gamma * u_prev_max^2 + path_sum), beta / b_current),
// +infinity while both denominators are zero (before the first nonzero
// gradient).
double SwapRate(double alpha, double beta, double gamma, double u_prev_max,
                double path_sum, double b_current);

// Stationary distribution x = Q^T x of a row-stochastic matrix, via a direct
// linear solve with the normalization row appended; falls back to damped
// power iteration from uniform when the direct solve leaves the residual
// above tol (reducible or ill-conditioned Q). Throws std::runtime_error if
// the fallback exceeds 1e5 iterations.
SimplexVector StationaryDistribution(const std::vector<std::vector<double>>& rows,
                                     double tol);

// Cross-player state read by every player's rate: per-player gradient path
// trackers (infinity norm), the running-max norm through the previous round,
// and the global clip state.
struct SharedBoard {
  explicit SharedBoard(int num_players)
      : grad_paths(num_players, PathTracker(Norm::kLInf)) {}

  std::vector<PathTracker> grad_paths;
  double u_prev_max = 0.0;  // U^{t-1} as seen by round t's act phase
  ClipState clip;

  double PathSum() const {
    double s = 0.0;
    for (const auto& p : grad_paths) s += p.accumulated();
    return s;
  }
};

// One player of Algorithm 1: a bank of per-action OFTRL-log-barrier experts,
// assembled into a transition matrix whose stationary distribution is played.
// Two-phase protocol per round: Act, then Feed exactly once.
class SwapPlayer {
 public:
  // Default coefficients: alpha = m sqrt(log T), beta = 1 / (2 sqrt(m)).
  // The worst-case stability analysis uses beta = 1 / (256 sqrt(m)); that
  // constant keeps the per-round expert movement below 1/2 under adversarial
  // gradients but makes self-play converge orders of magnitude slower than
  // necessary. The shipped default trades the analysis constant for the
  // empirical one; the local-norm stability diagnostic is asserted at runtime
  // either way.
  SwapPlayer(int num_actions, double alpha, double beta);

  static double Alpha(int num_actions, long horizon);
  static double Beta(int num_actions);

  // Computes every expert's point at the given rate, forms Q, and solves for
  // the stationary strategy. eta = +infinity plays uniform everywhere.
  const SimplexVector& Act(double eta);

  // Consumes this player's clipped gradient for the round just played;
  // expert a receives x(a) * clipped_grad.
  void Feed(std::span<const double> clipped_grad);

  int num_actions() const { return m_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const SimplexVector& last_strategy() const { return strategy_; }
  const std::vector<SimplexVector>& expert_points() const { return expert_points_; }
  const std::vector<std::vector<double>>& last_transition() const { return transition_; }

 private:
  int m_;
  double alpha_, beta_;
  std::vector<std::vector<double>> expert_cum_;   // row a: sum of clipped u_{i,a}
  std::vector<std::vector<double>> expert_last_;  // row a: previous clipped u_{i,a}
  std::vector<SimplexVector> expert_points_;
  std::vector<std::vector<double>> transition_;
  SimplexVector strategy_;
  bool awaiting_feed_ = false;
};

}  // namespace sfg

#endif  // SFG_SWAP_H_

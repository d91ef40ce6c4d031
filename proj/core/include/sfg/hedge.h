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

#ifndef SFG_HEDGE_H_
#define SFG_HEDGE_H_

#include <span>

#include "sfg/path_tracker.h"
#include "sfg/simplex.h"

namespace sfg {

// How the adaptive learning rate's denominator is fed.
//   kSharedGradients: own observed gradient path + opponent's observed
//     gradient path, both in the infinity norm.
//   kNoCommunication: own observed gradient path (infinity norm) + own
//     played-strategy path (1-norm); no opponent information needed.
enum class RateRule { kSharedGradients, kNoCommunication };

// Whether the learner treats its gradient as a gain (x-player) or a loss
// (y-player); the two updates differ only by the sign inside the softmax.
enum class Sense { kMaximize, kMinimize };

// Optimistic Hedge learner for one side of a two-player zero-sum game:
//   act: play softmax(sign * eta * (cum_grad + last_grad)),
//   rate: eta = sqrt(M / (own_path + partner_path)), infinity while the
//         denominator is zero (uniform play).
// The learner consumes whatever gradient vectors it is fed; corrupted play
// is produced by perturbing the feed, not by a separate learner.
class HedgeLearner {
 public:
  HedgeLearner(int dim, Sense sense, RateRule rule);

  // M = max{4, log(m) / 2^(3/2)}.
  static double MConst(int dim);

  // Learning rate for the upcoming round; +infinity while no nonzero
  // gradient has been observed. Nonincreasing across Observe calls.
  double CurrentRate() const;

  SimplexVector Act() const;

  // own_grad: the gradient observed this round. partner_signal: the
  // opponent's observed gradient (kSharedGradients) or this player's own
  // just-played strategy (kNoCommunication).
  void Observe(std::span<const double> own_grad, std::span<const double> partner_signal);

  int dim() const { return dim_; }
  double m_const() const { return m_const_; }

 private:
  int dim_;
  Sense sense_;
  RateRule rule_;
  double m_const_;
  std::vector<double> cum_grad_;
  std::vector<double> last_grad_;
  PathTracker own_path_;
  PathTracker partner_path_;
};

// One expert step of the scale-free baseline: plain (non-optimistic) Hedge
// with rate sqrt(m_const / path_accumulated), uniform when the path is zero.
SimplexVector AdaHedgeExpertAct(std::span<const double> cum_scores,
                                double path_accumulated, double m_const);

}  // namespace sfg

#endif  // SFG_HEDGE_H_

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

#include "sfg/metrics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sfg/hedge.h"

namespace sfg {

ExternalRegretResult ExternalRegret(const Trajectory& plays,
                                    const GradientTrajectory& grads,
                                    RegretSense sense) {
  if (plays.size() != grads.size()) {
    throw std::invalid_argument("ExternalRegret: trajectory length mismatch");
  }
  if (plays.empty()) return {0.0, 0};
  const int m = plays[0].dim();
  std::vector<double> cum(m, 0.0);
  double inner = 0.0;
  for (std::size_t t = 0; t < plays.size(); ++t) {
    if (plays[t].dim() != m || static_cast<int>(grads[t].size()) != m) {
      throw std::invalid_argument("ExternalRegret: dimension mismatch");
    }
    for (int a = 0; a < m; ++a) cum[a] += grads[t][a];
    inner += Dot(plays[t].span(), grads[t]);
  }
  if (sense == RegretSense::kGain) {
    int best = 0;
    for (int a = 1; a < m; ++a) {
      if (cum[a] > cum[best]) best = a;
    }
    return {cum[best] - inner, best};
  }
  int best = 0;
  for (int a = 1; a < m; ++a) {
    if (cum[a] < cum[best]) best = a;
  }
  return {inner - cum[best], best};
}

SwapRegretResult SwapRegret(const Trajectory& plays, const GradientTrajectory& utils) {
  if (plays.size() != utils.size()) {
    throw std::invalid_argument("SwapRegret: trajectory length mismatch");
  }
  if (plays.empty()) return {0.0, {}};
  const int m = plays[0].dim();
  // S(a, b) = sum_t x^t(a) u^t(b); per-row vertex maximization is optimal by
  // linearity over row-stochastic matrices.
  std::vector<std::vector<double>> s(m, std::vector<double>(m, 0.0));
  double inner = 0.0;
  for (std::size_t t = 0; t < plays.size(); ++t) {
    if (plays[t].dim() != m || static_cast<int>(utils[t].size()) != m) {
      throw std::invalid_argument("SwapRegret: dimension mismatch");
    }
    for (int a = 0; a < m; ++a) {
      const double xa = plays[t][a];
      if (xa == 0.0) continue;
      for (int b = 0; b < m; ++b) s[a][b] += xa * utils[t][b];
    }
    inner += Dot(plays[t].span(), utils[t]);
  }
  double best_total = 0.0;
  std::vector<int> best_swap(m, 0);
  for (int a = 0; a < m; ++a) {
    int best = 0;
    for (int b = 1; b < m; ++b) {
      if (s[a][b] > s[a][best]) best = b;
    }
    best_swap[a] = best;
    best_total += s[a][best];
  }
  return {best_total - inner, std::move(best_swap)};
}

double SwapRegretAt(const Trajectory& plays, const GradientTrajectory& utils,
                    const std::vector<std::vector<double>>& swap_matrix) {
  if (plays.size() != utils.size()) {
    throw std::invalid_argument("SwapRegretAt: trajectory length mismatch");
  }
  double total = 0.0;
  for (std::size_t t = 0; t < plays.size(); ++t) {
    const int m = plays[t].dim();
    for (int a = 0; a < m; ++a) {
      const double xa = plays[t][a];
      if (xa == 0.0) continue;
      double mapped = 0.0;
      for (int b = 0; b < m; ++b) mapped += swap_matrix[a][b] * utils[t][b];
      total += xa * (mapped - utils[t][a]);
    }
  }
  return total;
}

double Exploitability(const ZeroSumGame& game, const SimplexVector& x_avg,
                      const SimplexVector& y_avg) {
  const std::vector<double> g = game.GainGradient(y_avg);
  const std::vector<double> l = game.LossGradient(x_avg);
  const double best_gain = *std::max_element(g.begin(), g.end());
  const double best_loss = *std::min_element(l.begin(), l.end());
  return best_gain - best_loss;
}

double CeGap(const std::vector<Trajectory>& plays_per_player,
             const std::vector<GradientTrajectory>& utils_per_player) {
  if (plays_per_player.size() != utils_per_player.size()) {
    throw std::invalid_argument("CeGap: player count mismatch");
  }
  if (plays_per_player.empty()) return 0.0;
  const std::size_t horizon = plays_per_player[0].size();
  double worst = 0.0;
  for (std::size_t i = 0; i < plays_per_player.size(); ++i) {
    if (plays_per_player[i].size() != horizon ||
        utils_per_player[i].size() != horizon) {
      throw std::invalid_argument("CeGap: trajectory length mismatch");
    }
    worst = std::max(worst, SwapRegret(plays_per_player[i], utils_per_player[i]).value);
  }
  return horizon == 0 ? 0.0 : worst / static_cast<double>(horizon);
}

TheoreticalBounds ComputeBounds(double a_diff, int m_x, int m_y, long horizon,
                                BoundVariant variant) {
  const double mx = HedgeLearner::MConst(m_x);
  const double my = HedgeLearner::MConst(m_y);
  const double m_big = std::max(mx, my);
  TheoreticalBounds b{};
  if (variant == BoundVariant::kHonestZeroSum) {
    b.bound_x = 8.0 * a_diff * std::sqrt(5.0 * (m_big + 1.0) * mx);
    b.bound_y = 8.0 * a_diff * std::sqrt(5.0 * (m_big + 1.0) * my);
  } else {
    const double m_actions = static_cast<double>(std::max(m_x, m_y));
    const double v =
        (1.0 + std::sqrt(a_diff)) * std::sqrt(a_diff) * m_big * std::log(m_actions);
    b.bound_x = v;
    b.bound_y = v;
  }
  b.nash_gap_bound =
      horizon > 0 ? (b.bound_x + b.bound_y) / static_cast<double>(horizon) : 0.0;
  return b;
}

RegretVariantReport RegretVariantDeltas(const RegretLedger& ledger, double a_max) {
  const std::size_t horizon = ledger.played.size();
  if (ledger.prescribed.size() != horizon || ledger.true_grads.size() != horizon ||
      ledger.observed_grads.size() != horizon) {
    throw std::invalid_argument("RegretVariantDeltas: incomplete ledger");
  }
  RegretVariantReport r{};
  r.reg_played_true = ExternalRegret(ledger.played, ledger.true_grads, ledger.sense).value;
  r.reg_prescribed_true =
      ExternalRegret(ledger.prescribed, ledger.true_grads, ledger.sense).value;
  r.reg_played_observed =
      ExternalRegret(ledger.played, ledger.observed_grads, ledger.sense).value;
  r.reg_prescribed_observed =
      ExternalRegret(ledger.prescribed, ledger.observed_grads, ledger.sense).value;
  for (std::size_t t = 0; t < horizon; ++t) {
    r.strategy_deviation_total +=
        L1Distance(ledger.played[t].span(), ledger.prescribed[t].span());
    r.corruption_total += LInfDistance(ledger.true_grads[t], ledger.observed_grads[t]);
  }
  const double dev_bound = a_max * r.strategy_deviation_total + 1e-9;
  const double cor_bound = 2.0 * r.corruption_total + 1e-9;
  r.deltas_ok =
      std::abs(r.reg_played_true - r.reg_prescribed_true) <= dev_bound &&
      std::abs(r.reg_played_observed - r.reg_prescribed_observed) <= dev_bound &&
      std::abs(r.reg_played_true - r.reg_played_observed) <= cor_bound &&
      std::abs(r.reg_prescribed_true - r.reg_prescribed_observed) <= cor_bound;
  return r;
}

}  // namespace sfg

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

#include "sfg/run.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "sfg/log_barrier.h"
#include "sfg/rng.h"

namespace sfg {

using nlohmann::json;

std::string DynamicsName(Dynamics d) {
  switch (d) {
    case Dynamics::kOptHedgeShared: return "opt_hedge_shared";
    case Dynamics::kOptHedgeNoComm: return "opt_hedge_nocomm";
    case Dynamics::kAlgorithm1: return "algorithm1";
    case Dynamics::kAdaHedgeBaseline: return "adahedge_baseline";
  }
  return "unknown";
}

Dynamics ParseDynamics(const std::string& name) {
  if (name == "opt_hedge_shared") return Dynamics::kOptHedgeShared;
  if (name == "opt_hedge_nocomm") return Dynamics::kOptHedgeNoComm;
  if (name == "algorithm1") return Dynamics::kAlgorithm1;
  if (name == "adahedge_baseline") return Dynamics::kAdaHedgeBaseline;
  throw std::invalid_argument("unknown dynamics: " + name);
}

namespace {

ScheduleKind ParseSchedule(const std::string& s) {
  if (s == "none") return ScheduleKind::kNone;
  if (s == "front_loaded") return ScheduleKind::kFrontLoaded;
  if (s == "periodic") return ScheduleKind::kPeriodic;
  if (s == "custom") return ScheduleKind::kCustom;
  throw std::invalid_argument("unknown corruption schedule: " + s);
}

UtilityShape ParseShape(const std::string& s) {
  if (s == "sign_flip_spike") return UtilityShape::kSignFlipSpike;
  if (s == "constant_offset") return UtilityShape::kConstantOffset;
  throw std::invalid_argument("unknown corruption shape: " + s);
}

CorruptionPlan ParsePlan(const json& j) {
  const double strategy_budget = j.value("strategy_budget", 0.0);
  const double utility_budget = j.value("utility_budget", 0.0);
  const int target = j.value("target_action", 0);
  const double spike = j.value("spike_magnitude", 0.0);
  const UtilityShape shape = ParseShape(j.value("shape", std::string("sign_flip_spike")));
  const ScheduleKind schedule = ParseSchedule(j.value("schedule", std::string("none")));
  const int param = j.value("schedule_param", 0);
  CorruptionPlan plan = CorruptionPlan::Combined(strategy_budget, target, utility_budget,
                                                 spike, shape, schedule, param);
  if (schedule == ScheduleKind::kCustom) {
    plan.set_custom_rounds(j.at("rounds").get<std::vector<long>>());
  }
  return plan;
}

// Rounds an almost-normalized nonnegative vector (a running average of
// simplex points) back onto the simplex exactly.
std::vector<double> NormalizeCopy(std::vector<double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  for (double& x : v) x /= sum;
  return v;
}

}  // namespace

RunConfig ParseRunConfigJson(const std::string& text) {
  json j = json::parse(text);
  RunConfig c;
  if (j.contains("game_file")) {
    c.game = LoadGameFile(j.at("game_file").get<std::string>());
  } else {
    c.game = ParseGameJson(j.at("game").dump());
  }
  c.horizon = j.at("horizon").get<long>();
  if (c.horizon < 1) throw std::invalid_argument("config: horizon must be >= 1");
  c.dynamics = ParseDynamics(j.at("dynamics").get<std::string>());
  c.seed = j.value("seed", std::uint64_t{0});
  c.cadence = j.value("cadence", 0L);
  c.gamma = j.value("gamma", 0.0);
  c.clipped_rate_paths = j.value("clipped_rate_paths", true);
  c.out_dir = j.value("out_dir", std::string());
  if (j.contains("scale_factors")) {
    c.scale_factors = j.at("scale_factors").get<std::vector<double>>();
    for (double s : c.scale_factors) {
      if (!(s > 0.0)) throw std::invalid_argument("config: scale factors must be > 0");
    }
  }
  if (j.contains("corruption")) {
    const json& cj = j.at("corruption");
    if (cj.contains("x")) c.x_plan = ParsePlan(cj.at("x"));
    if (cj.contains("y")) c.y_plan = ParsePlan(cj.at("y"));
  }
  return c;
}

RunConfig LoadRunConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseRunConfigJson(ss.str());
}

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

// ---------------------------------------------------------------------------
// Zero-sum driver

ZeroSumResult RunZeroSum(const RunConfig& config) {
  const auto* game_ptr = std::get_if<ZeroSumGame>(&config.game);
  if (game_ptr == nullptr) {
    throw std::invalid_argument("RunZeroSum: config game is not zero-sum");
  }
  if (config.dynamics != Dynamics::kOptHedgeShared &&
      config.dynamics != Dynamics::kOptHedgeNoComm) {
    throw std::invalid_argument("RunZeroSum: dynamics must be a Hedge variant");
  }
  const ZeroSumGame& game = *game_ptr;
  const long horizon = config.horizon;
  const int m_x = game.num_rows();
  const int m_y = game.num_cols();
  const RateRule rule = config.dynamics == Dynamics::kOptHedgeShared
                            ? RateRule::kSharedGradients
                            : RateRule::kNoCommunication;

  HedgeLearner learner_x(m_x, Sense::kMaximize, rule);
  HedgeLearner learner_y(m_y, Sense::kMinimize, rule);
  CorruptionPlan plan_x = config.x_plan;
  CorruptionPlan plan_y = config.y_plan;

  ZeroSumResult r;
  r.ledger_x.sense = RegretSense::kGain;
  r.ledger_y.sense = RegretSense::kLoss;
  r.degenerate_zero_range = game.Range() == 0.0;
  r.bounds = ComputeBounds(game.Range(), m_x, m_y, horizon,
                           rule == RateRule::kSharedGradients
                               ? BoundVariant::kHonestZeroSum
                               : BoundVariant::kNoCommZeroSum);

  std::vector<double> cum_g(m_x, 0.0), cum_g_obs(m_x, 0.0);
  std::vector<double> cum_l(m_y, 0.0), cum_l_obs(m_y, 0.0);
  double inner_xg = 0.0, inner_xg_obs = 0.0, inner_yl = 0.0, inner_yl_obs = 0.0;
  std::vector<double> sum_x(m_x, 0.0), sum_y(m_y, 0.0);

  const long cad = config.EffectiveCadence();
  bool bound_ok = true;

  std::ostringstream csv;
  csv << "t,eta_x,eta_y,reg_x,reg_y,reg_x_obs,reg_y_obs,exploitability";
  for (int a = 0; a < m_x; ++a) csv << ",x" << a;
  for (int a = 0; a < m_y; ++a) csv << ",y" << a;
  csv << "\n";

  for (long t = 1; t <= horizon; ++t) {
    const double eta_x = learner_x.CurrentRate();
    const double eta_y = learner_y.CurrentRate();
    const SimplexVector x_hat = learner_x.Act();
    const SimplexVector y_hat = learner_y.Act();
    const SimplexVector x = plan_x.DeviateStrategy(x_hat, t);
    const SimplexVector y = plan_y.DeviateStrategy(y_hat, t);
    const std::vector<double> g = game.GainGradient(y);
    const std::vector<double> l = game.LossGradient(x);
    const std::vector<double> g_obs = plan_x.CorruptUtility(g, t);
    const std::vector<double> l_obs = plan_y.CorruptUtility(l, t);

    learner_x.Observe(g_obs, rule == RateRule::kSharedGradients
                                 ? std::span<const double>(l_obs)
                                 : x_hat.span());
    learner_y.Observe(l_obs, rule == RateRule::kSharedGradients
                                 ? std::span<const double>(g_obs)
                                 : y_hat.span());

    r.eta_x.push_back(eta_x);
    r.eta_y.push_back(eta_y);
    r.ledger_x.prescribed.push_back(x_hat);
    r.ledger_x.played.push_back(x);
    r.ledger_x.true_grads.push_back(g);
    r.ledger_x.observed_grads.push_back(g_obs);
    r.ledger_y.prescribed.push_back(y_hat);
    r.ledger_y.played.push_back(y);
    r.ledger_y.true_grads.push_back(l);
    r.ledger_y.observed_grads.push_back(l_obs);

    for (int a = 0; a < m_x; ++a) {
      cum_g[a] += g[a];
      cum_g_obs[a] += g_obs[a];
      sum_x[a] += x[a];
    }
    for (int a = 0; a < m_y; ++a) {
      cum_l[a] += l[a];
      cum_l_obs[a] += l_obs[a];
      sum_y[a] += y[a];
    }
    inner_xg += Dot(x.span(), g);
    inner_xg_obs += Dot(x.span(), g_obs);
    inner_yl += Dot(y.span(), l);
    inner_yl_obs += Dot(y.span(), l_obs);

    const double reg_x = *std::max_element(cum_g.begin(), cum_g.end()) - inner_xg;
    const double reg_y = inner_yl - *std::min_element(cum_l.begin(), cum_l.end());
    const double reg_x_obs =
        *std::max_element(cum_g_obs.begin(), cum_g_obs.end()) - inner_xg_obs;
    const double reg_y_obs =
        inner_yl_obs - *std::min_element(cum_l_obs.begin(), cum_l_obs.end());
    r.reg_x_prefix.push_back(reg_x);
    r.reg_y_prefix.push_back(reg_y);
    r.reg_x_obs_prefix.push_back(reg_x_obs);
    r.reg_y_obs_prefix.push_back(reg_y_obs);
    r.max_reg_x = std::max(r.max_reg_x, reg_x);
    r.max_reg_y = std::max(r.max_reg_y, reg_y);
    if (reg_x > r.bounds.bound_x + 1e-9 || reg_y > r.bounds.bound_y + 1e-9) {
      bound_ok = false;
    }

    if (t % cad == 0 || t == horizon) {
      std::vector<double> avg_x(m_x), avg_y(m_y);
      for (int a = 0; a < m_x; ++a) avg_x[a] = sum_x[a] / t;
      for (int a = 0; a < m_y; ++a) avg_y[a] = sum_y[a] / t;
      const double gap = Exploitability(game, SimplexVector(NormalizeCopy(avg_x)),
                                        SimplexVector(NormalizeCopy(avg_y)));
      r.cadence_ts.push_back(t);
      r.exploitability_cadence.push_back(gap);
      csv << t << ',' << FormatDouble(eta_x) << ',' << FormatDouble(eta_y) << ','
          << FormatDouble(reg_x) << ',' << FormatDouble(reg_y) << ','
          << FormatDouble(reg_x_obs) << ',' << FormatDouble(reg_y_obs) << ','
          << FormatDouble(gap);
      for (int a = 0; a < m_x; ++a) csv << ',' << FormatDouble(x[a]);
      for (int a = 0; a < m_y; ++a) csv << ',' << FormatDouble(y[a]);
      csv << "\n";
    }
  }

  r.bound_satisfied_every_prefix = bound_ok;
  r.final_exploitability = r.exploitability_cadence.empty()
                               ? 0.0
                               : r.exploitability_cadence.back();
  r.csv = csv.str();
  return r;
}

// ---------------------------------------------------------------------------
// General-sum driver

GeneralSumDriver::GeneralSumDriver(std::vector<int> action_counts, long horizon,
                                   double gamma, bool clipped_rate_paths)
    : horizon_(horizon),
      gamma_(gamma > 0.0 ? gamma : 8.0 * action_counts.size()),
      clipped_rate_paths_(clipped_rate_paths),
      board_(static_cast<int>(action_counts.size())) {
  if (horizon < 1) throw std::invalid_argument("GeneralSumDriver: horizon < 1");
  const int n = static_cast<int>(action_counts.size());
  for (int i = 0; i < n; ++i) {
    players_.emplace_back(action_counts[i], SwapPlayer::Alpha(action_counts[i], horizon),
                          SwapPlayer::Beta(action_counts[i]));
    strategies_.push_back(SimplexVector::Uniform(action_counts[i]));
  }
  prev_expert_points_.resize(n);
  eta_.resize(n);
  stats_.sum_clip_inf_jump.assign(n, 0.0);
  stats_.sum_clip_inf_sq_jump.assign(n, 0.0);
}

const std::vector<SimplexVector>& GeneralSumDriver::BeginRound() {
  if (in_round_) throw std::logic_error("GeneralSumDriver: BeginRound called twice");
  if (t_ >= horizon_) throw std::logic_error("GeneralSumDriver: horizon exhausted");
  const int n = static_cast<int>(players_.size());
  const double path_sum = board_.PathSum();
  for (int i = 0; i < n; ++i) {
    SwapPlayer& p = players_[i];
    const double eta = SwapRate(p.alpha(), p.beta(), gamma_, board_.u_prev_max, path_sum,
                                board_.clip.b_current());
    eta_[i].push_back(eta);
    strategies_[i] = p.Act(eta);
    // Stationarity residual ||Q^T x - x||_1.
    const auto& q = p.last_transition();
    const auto& x = p.last_strategy();
    double res = 0.0;
    for (int b = 0; b < p.num_actions(); ++b) {
      double qx = 0.0;
      for (int a = 0; a < p.num_actions(); ++a) qx += q[a][b] * x[a];
      res += std::abs(qx - x[b]);
    }
    if (res > 1e-10) ++stats_.stationarity_violations;
  }
  // Stability of the expert bank between consecutive rounds: compare the
  // points just computed (round t_+1) against the previous round's.
  if (t_ >= 1) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      double sum = 0.0;
      for (int a = 0; a < players_[i].num_actions(); ++a) {
        sum += LogBarrierLocalNorm(prev_expert_points_[i][a],
                                   players_[i].expert_points()[a]);
      }
      worst = std::max(worst, sum);
    }
    stability_sums_.push_back(worst);
  }
  for (int i = 0; i < n; ++i) prev_expert_points_[i] = players_[i].expert_points();
  ++t_;
  in_round_ = true;
  return strategies_;
}

void GeneralSumDriver::FinishRound(const std::vector<std::vector<double>>& utils) {
  if (!in_round_) throw std::logic_error("GeneralSumDriver: FinishRound before BeginRound");
  const int n = static_cast<int>(players_.size());
  if (static_cast<int>(utils.size()) != n) {
    throw std::invalid_argument("GeneralSumDriver: one utility vector per player required");
  }
  double max_norm = 0.0;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(utils[i].size()) != players_[i].num_actions()) {
      throw std::invalid_argument("GeneralSumDriver: utility dimension mismatch");
    }
    max_norm = std::max(max_norm, LInfNorm(utils[i]));
  }
  const double b_t = board_.clip.b_current();
  const bool prev_jumped = !jump_flags_.empty() && jump_flags_.back();
  const ClipUpdateResult cu = board_.clip.Update(max_norm);
  jump_flags_.push_back(cu.jumped);
  const double u_t = board_.clip.u_running_max();
  if (cu.b_next > 2.0 * u_t * (1.0 + 1e-12)) ++stats_.bu_violations;

  const bool in_jump_set = cu.jumped || prev_jumped;
  for (int i = 0; i < n; ++i) {
    const std::vector<double> clipped = ClipGradient(utils[i], b_t, cu.b_next);
    const double clipped_norm = LInfNorm(clipped);
    if (clipped_norm > 2.0 * b_t * (1.0 + 1e-12) && b_t > 0.0) {
      ++stats_.clip_norm_violations;
    }
    if (b_t == 0.0 && clipped_norm != 0.0) ++stats_.clip_norm_violations;
    if (in_jump_set) {
      stats_.sum_clip_inf_jump[i] += clipped_norm;
      stats_.sum_clip_inf_sq_jump[i] += clipped_norm * clipped_norm;
    }
    players_[i].Feed(clipped);
    board_.grad_paths[i].Update(clipped_rate_paths_ ? std::span<const double>(clipped)
                                                    : std::span<const double>(utils[i]));
  }
  board_.u_prev_max = u_t;
  in_round_ = false;
}

void GeneralSumDriver::FinalizeInvariants(double u_max_reference) {
  const ClipState& clip = board_.clip;
  if (clip.omega() > 0.0) {
    const int allowed = static_cast<int>(std::floor(
                            std::log2(2.0 * clip.u_running_max() / clip.omega()))) +
                        1;
    stats_.jump_count_ok = clip.jump_count() <= allowed;
  }
  const double u = u_max_reference;
  for (std::size_t i = 0; i < players_.size(); ++i) {
    if (stats_.sum_clip_inf_jump[i] > 16.0 * u * (1.0 + 1e-12) ||
        stats_.sum_clip_inf_sq_jump[i] > 64.0 * u * u * (1.0 + 1e-12)) {
      stats_.jump_cost_ok = false;
    }
  }
  // Stability diagnostic on I-rounds (complement of J = J' + following rounds).
  const std::vector<int> j_rounds = clip.ExtendedJumpRounds(static_cast<int>(t_));
  std::vector<bool> in_j(static_cast<std::size_t>(t_) + 1, false);
  for (int t : j_rounds) in_j[t] = true;
  stats_.stability_violations = 0;
  for (long t = 1; t + 1 <= t_; ++t) {
    if (in_j[t]) continue;
    if (stability_sums_[t - 1] > 0.5 + 1e-12) ++stats_.stability_violations;
  }
}

namespace {

// Incremental per-player swap-regret tracker: S(a,b) = sum_t x^t(a) u^t(b)
// and the realized inner sum, giving the prefix swap regret in O(m^2).
class SwapRegretTracker {
 public:
  explicit SwapRegretTracker(int m) : m_(m), s_(m, std::vector<double>(m, 0.0)) {}

  void Observe(const SimplexVector& x, const std::vector<double>& u) {
    for (int a = 0; a < m_; ++a) {
      const double xa = x[a];
      for (int b = 0; b < m_; ++b) s_[a][b] += xa * u[b];
    }
    inner_ += Dot(x.span(), u);
  }

  double Value() const {
    double best = 0.0;
    for (int a = 0; a < m_; ++a) {
      best += *std::max_element(s_[a].begin(), s_[a].end());
    }
    return best - inner_;
  }

 private:
  int m_;
  std::vector<std::vector<double>> s_;
  double inner_ = 0.0;
};

// Per-expert plain-Hedge state of the baseline dynamics.
struct BaselinePlayer {
  BaselinePlayer(int m)
      : m_const(HedgeLearner::MConst(m)),
        cum(m, std::vector<double>(m, 0.0)),
        paths(m, PathTracker(Norm::kLInf)) {}

  double m_const;
  std::vector<std::vector<double>> cum;  // [expert][action]
  std::vector<PathTracker> paths;       // per expert, over u_{i,a}
};

}  // namespace

GeneralSumResult RunGeneralSum(const RunConfig& config) {
  const auto* game_ptr = std::get_if<GeneralSumGame>(&config.game);
  if (game_ptr == nullptr) {
    throw std::invalid_argument("RunGeneralSum: config game is not general-sum");
  }
  if (config.dynamics != Dynamics::kAlgorithm1 &&
      config.dynamics != Dynamics::kAdaHedgeBaseline) {
    throw std::invalid_argument(
        "RunGeneralSum: dynamics must be algorithm1 or adahedge_baseline");
  }
  const GeneralSumGame& game = *game_ptr;
  const long horizon = config.horizon;
  const int n = game.num_players();
  const std::vector<int>& counts = game.action_counts();

  GeneralSumResult r;
  r.plays.resize(n);
  r.utils.resize(n);
  r.eta.resize(n);
  std::vector<SwapRegretTracker> trackers;
  for (int i = 0; i < n; ++i) trackers.emplace_back(counts[i]);

  const long cad = config.EffectiveCadence();
  std::ostringstream csv;
  csv << "t";
  for (int i = 0; i < n; ++i) csv << ",eta_" << i;
  csv << ",B,U,jump";
  for (int i = 0; i < n; ++i) csv << ",swapreg_" << i;
  csv << ",ce_gap";
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < counts[i]; ++a) csv << ",x" << i << "_" << a;
  }
  csv << "\n";

  const auto emit_row = [&](long t, const std::vector<SimplexVector>& strategies,
                            const std::vector<double>& etas, double b, double u,
                            bool jumped) {
    if (!(t % cad == 0 || t == horizon)) return;
    double worst_swap = 0.0;
    csv << t;
    for (int i = 0; i < n; ++i) csv << ',' << FormatDouble(etas[i]);
    csv << ',' << FormatDouble(b) << ',' << FormatDouble(u) << ',' << (jumped ? 1 : 0);
    for (int i = 0; i < n; ++i) {
      const double v = trackers[i].Value();
      worst_swap = std::max(worst_swap, v);
      csv << ',' << FormatDouble(v);
    }
    csv << ',' << FormatDouble(worst_swap / t);
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a < counts[i]; ++a) csv << ',' << FormatDouble(strategies[i][a]);
    }
    csv << "\n";
  };

  if (config.dynamics == Dynamics::kAlgorithm1) {
    GeneralSumDriver driver(counts, horizon, config.gamma, config.clipped_rate_paths);
    for (long t = 1; t <= horizon; ++t) {
      const std::vector<SimplexVector>& strategies = driver.BeginRound();
      std::vector<std::vector<double>> utils(n);
      for (int i = 0; i < n; ++i) utils[i] = game.ExpectedUtility(i, strategies);
      std::vector<double> etas(n);
      for (int i = 0; i < n; ++i) {
        etas[i] = driver.eta(i).back();
        r.plays[i].push_back(strategies[i]);
        r.utils[i].push_back(utils[i]);
        trackers[i].Observe(strategies[i], utils[i]);
      }
      driver.FinishRound(utils);
      emit_row(t, strategies, etas, driver.board().clip.b_current(),
               driver.board().clip.u_running_max(), driver.jump_flags().back());
    }
    driver.FinalizeInvariants(game.MaxAbs());
    r.stats = driver.stats();
    r.eta = {};
    for (int i = 0; i < n; ++i) r.eta.push_back(driver.eta(i));
    r.jump_rounds = driver.board().clip.jump_rounds();
    r.omega = driver.board().clip.omega();
    r.b_final = driver.board().clip.b_current();
    r.u_running_max = driver.board().clip.u_running_max();
  } else {
    // Baseline: per-expert plain Hedge, no clipping, no optimism.
    std::vector<BaselinePlayer> players;
    std::vector<SimplexVector> strategies;
    for (int i = 0; i < n; ++i) {
      players.emplace_back(counts[i]);
      strategies.push_back(SimplexVector::Uniform(counts[i]));
    }
    double u_max_seen = 0.0;
    for (long t = 1; t <= horizon; ++t) {
      std::vector<double> etas(n);
      for (int i = 0; i < n; ++i) {
        const int m = counts[i];
        std::vector<std::vector<double>> q(m);
        double min_rate = std::numeric_limits<double>::infinity();
        for (int a = 0; a < m; ++a) {
          const double acc = players[i].paths[a].accumulated();
          if (acc > 0.0) {
            min_rate = std::min(min_rate, std::sqrt(players[i].m_const / acc));
          }
          q[a] = AdaHedgeExpertAct(players[i].cum[a], acc, players[i].m_const).weights();
        }
        etas[i] = min_rate;
        strategies[i] = StationaryDistribution(q, 1e-10);
      }
      std::vector<std::vector<double>> utils(n);
      for (int i = 0; i < n; ++i) utils[i] = game.ExpectedUtility(i, strategies);
      for (int i = 0; i < n; ++i) {
        u_max_seen = std::max(u_max_seen, LInfNorm(utils[i]));
        r.plays[i].push_back(strategies[i]);
        r.utils[i].push_back(utils[i]);
        trackers[i].Observe(strategies[i], utils[i]);
        for (int a = 0; a < counts[i]; ++a) {
          std::vector<double> expert_u(counts[i]);
          for (int b = 0; b < counts[i]; ++b) {
            expert_u[b] = strategies[i][a] * utils[i][b];
          }
          for (int b = 0; b < counts[i]; ++b) players[i].cum[a][b] += expert_u[b];
          players[i].paths[a].Update(expert_u);
        }
        r.eta[i].push_back(etas[i]);
      }
      emit_row(t, strategies, etas, 0.0, u_max_seen, false);
    }
  }

  for (int i = 0; i < n; ++i) r.swap_regret_final.push_back(trackers[i].Value());
  r.ce_gap_final =
      *std::max_element(r.swap_regret_final.begin(), r.swap_regret_final.end()) /
      static_cast<double>(horizon);
  r.csv = csv.str();
  return r;
}

// ---------------------------------------------------------------------------
// Scale sweep

namespace {

// Flat per-round strategy trajectories for one run, concatenated across
// players, used for cross-scale comparison.
std::vector<Trajectory> CollectTrajectories(const RunConfig& config) {
  if (std::holds_alternative<ZeroSumGame>(config.game)) {
    ZeroSumResult zr = RunZeroSum(config);
    return {std::move(zr.ledger_x.played), std::move(zr.ledger_y.played)};
  }
  GeneralSumResult gr = RunGeneralSum(config);
  return std::move(gr.plays);
}

}  // namespace

ScaleSweepResult RunScaleSweep(const RunConfig& config) {
  if (config.scale_factors.size() < 2) {
    throw std::invalid_argument("RunScaleSweep: at least two scale factors required");
  }
  ScaleSweepResult result;
  result.scales = config.scale_factors;
  std::vector<std::vector<Trajectory>> runs;
  for (double c : config.scale_factors) {
    RunConfig cfg = config;
    cfg.game = RescaledGame(config.game, c);
    runs.push_back(CollectTrajectories(cfg));
  }
  double dev = 0.0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    for (std::size_t s = r + 1; s < runs.size(); ++s) {
      for (std::size_t p = 0; p < runs[r].size(); ++p) {
        for (std::size_t t = 0; t < runs[r][p].size(); ++t) {
          dev = std::max(dev, LInfDistance(runs[r][p][t].span(), runs[s][p][t].span()));
        }
      }
    }
  }
  result.max_deviation = dev;
  result.pass = dev <= 1e-8;
  return result;
}

// ---------------------------------------------------------------------------
// Summaries

namespace {

json ConfigEcho(const RunConfig& config) {
  json j;
  j["dynamics"] = DynamicsName(config.dynamics);
  j["horizon"] = config.horizon;
  j["seed"] = config.seed;
  j["cadence"] = config.EffectiveCadence();
  j["gamma"] = config.gamma;
  j["clipped_rate_paths"] = config.clipped_rate_paths;
  j["rng"] = Rng::kAlgorithmId;
  return j;
}

}  // namespace

std::string BuildZeroSumSummaryJson(const RunConfig& config, const ZeroSumResult& result,
                                    double wall_seconds) {
  json j;
  j["config"] = ConfigEcho(config);
  j["reg_x"] = result.reg_x_prefix.back();
  j["reg_y"] = result.reg_y_prefix.back();
  j["reg_x_obs"] = result.reg_x_obs_prefix.back();
  j["reg_y_obs"] = result.reg_y_obs_prefix.back();
  j["max_reg_x"] = result.max_reg_x;
  j["max_reg_y"] = result.max_reg_y;
  j["bound_x"] = result.bounds.bound_x;
  j["bound_y"] = result.bounds.bound_y;
  j["nash_gap_bound"] = result.bounds.nash_gap_bound;
  j["bound_satisfied"] = result.bound_satisfied_every_prefix;
  j["exploitability"] = result.final_exploitability;
  j["degenerate_zero_range"] = result.degenerate_zero_range;
  j["x_budget_spent_strategy"] = config.x_plan.spent_strategy();
  j["wall_seconds"] = wall_seconds;
  return j.dump(2);
}

std::string BuildGeneralSumSummaryJson(const RunConfig& config,
                                       const GeneralSumResult& result,
                                       double wall_seconds) {
  json j;
  j["config"] = ConfigEcho(config);
  j["swap_regret"] = result.swap_regret_final;
  j["ce_gap"] = result.ce_gap_final;
  j["jump_count"] = result.jump_rounds.size();
  j["omega"] = result.omega;
  j["b_final"] = result.b_final;
  j["u_running_max"] = result.u_running_max;
  j["invariants_clean"] = result.stats.AllClean();
  j["clip_norm_violations"] = result.stats.clip_norm_violations;
  j["bu_violations"] = result.stats.bu_violations;
  j["stationarity_violations"] = result.stats.stationarity_violations;
  j["stability_violations"] = result.stats.stability_violations;
  j["jump_count_ok"] = result.stats.jump_count_ok;
  j["jump_cost_ok"] = result.stats.jump_cost_ok;
  j["wall_seconds"] = wall_seconds;
  return j.dump(2);
}

std::string BuildScaleSweepSummaryJson(const RunConfig& config,
                                       const ScaleSweepResult& result,
                                       double wall_seconds) {
  json j;
  j["config"] = ConfigEcho(config);
  j["scales"] = result.scales;
  j["max_deviation"] = result.max_deviation;
  j["pass"] = result.pass;
  j["wall_seconds"] = wall_seconds;
  return j.dump(2);
}

}  // namespace sfg

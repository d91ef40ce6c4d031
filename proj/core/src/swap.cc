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

#include "sfg/swap.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sfg {

ClipUpdateResult ClipState::Update(double max_norm) {
  if (!(max_norm >= 0.0) || !std::isfinite(max_norm)) {
    throw std::invalid_argument("ClipState::Update: max_norm must be finite and >= 0");
  }
  ++t_;
  u_max_ = std::max(u_max_, max_norm);
  bool jumped = false;
  if (b_ == 0.0) {
    if (max_norm > 0.0) {
      omega_ = max_norm;
      b_ = max_norm;
      jumped = true;
    }
  } else {
    // Smallest k >= 0 with 2^(k+1) B >= max_norm; doubling keeps B an exact
    // power-of-two multiple of omega.
    double candidate = b_;
    while (2.0 * candidate < max_norm) candidate *= 2.0;
    jumped = candidate != b_;
    b_ = candidate;
  }
  if (jumped) jump_rounds_.push_back(t_);
  return {b_, jumped};
}

std::vector<int> ClipState::ExtendedJumpRounds(int horizon) const {
  std::vector<int> j;
  for (int t : jump_rounds_) {
    if (t <= horizon) j.push_back(t);
    if (t + 1 <= horizon) j.push_back(t + 1);
  }
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  return j;
}

std::vector<double> ClipGradient(std::span<const double> u, double b_t, double b_next) {
  if (b_next < b_t || b_t < 0.0) {
    throw std::invalid_argument("ClipGradient: requires b_next >= b_t >= 0");
  }
  std::vector<double> out(u.size(), 0.0);
  if (b_t == 0.0) {
    if (b_next == 0.0) {
      for (double v : u) {
        if (v != 0.0) {
          throw std::logic_error("ClipGradient: b_next = 0 with nonzero gradient");
        }
      }
    }
    return out;
  }
  const double ratio = b_t / b_next;
  for (std::size_t k = 0; k < u.size(); ++k) out[k] = ratio * u[k];
  return out;
}

double SwapRate(double alpha, double beta, double gamma, double u_prev_max,
                double path_sum, double b_current) {
  const double denom_sq = gamma * u_prev_max * u_prev_max + path_sum;
  const double inf = std::numeric_limits<double>::infinity();
  const double branch_alpha = denom_sq > 0.0 ? alpha / std::sqrt(denom_sq) : inf;
  const double branch_beta = b_current > 0.0 ? beta / b_current : inf;
  return std::min(branch_alpha, branch_beta);
}

namespace {

double StationaryResidualL1(const std::vector<std::vector<double>>& rows,
                            const std::vector<double>& x) {
  const int m = static_cast<int>(rows.size());
  double res = 0.0;
  for (int j = 0; j < m; ++j) {
    double qx = 0.0;
    for (int a = 0; a < m; ++a) qx += rows[a][j] * x[a];
    res += std::abs(qx - x[j]);
  }
  return res;
}

// Gaussian elimination with partial pivoting on (Q^T - I) x = 0 with the
// last equation replaced by 1^T x = 1. Returns false on a (near) singular
// pivot.
bool DirectStationarySolve(const std::vector<std::vector<double>>& rows,
                           std::vector<double>* x_out) {
  const int m = static_cast<int>(rows.size());
  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
  for (int r = 0; r < m - 1; ++r) {
    for (int c = 0; c < m; ++c) a[r][c] = rows[c][r] - (r == c ? 1.0 : 0.0);
  }
  for (int c = 0; c < m; ++c) a[m - 1][c] = 1.0;
  a[m - 1][m] = 1.0;

  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int r = col + 1; r < m; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-300) return false;
    std::swap(a[col], a[pivot]);
    for (int r = col + 1; r < m; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double>& x = *x_out;
  x.assign(m, 0.0);
  for (int r = m - 1; r >= 0; --r) {
    double s = a[r][m];
    for (int c = r + 1; c < m; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return true;
}

}  // namespace

SimplexVector StationaryDistribution(const std::vector<std::vector<double>>& rows,
                                     double tol) {
  const int m = static_cast<int>(rows.size());
  if (m <= 0) throw std::invalid_argument("StationaryDistribution: empty matrix");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m) {
      throw std::invalid_argument("StationaryDistribution: non-square matrix");
    }
    double sum = 0.0;
    for (double v : row) {
      if (!(v >= 0.0)) {
        throw std::invalid_argument("StationaryDistribution: negative entry");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
      throw std::invalid_argument("StationaryDistribution: row does not sum to 1");
    }
  }

  std::vector<double> x;
  if (DirectStationarySolve(rows, &x)) {
    double minx = *std::min_element(x.begin(), x.end());
    if (minx > -1e-12) {
      double sum = 0.0;
      for (double& v : x) {
        v = std::max(v, 0.0);
        sum += v;
      }
      for (double& v : x) v /= sum;
      if (StationaryResidualL1(rows, x) <= tol) {
        return SimplexVector(std::move(x));
      }
    }
  }

  // Damped power iteration from uniform; the damping keeps periodic chains
  // (e.g. a pure swap) converging.
  x.assign(m, 1.0 / m);
  std::vector<double> next(m);
  for (long iter = 0; iter < 100000; ++iter) {
    for (int j = 0; j < m; ++j) {
      double qx = 0.0;
      for (int a = 0; a < m; ++a) qx += rows[a][j] * x[a];
      next[j] = 0.5 * x[j] + 0.5 * qx;
    }
    double sum = 0.0;
    for (double v : next) sum += v;
    for (int j = 0; j < m; ++j) x[j] = next[j] / sum;
    if (StationaryResidualL1(rows, x) <= tol) {
      return SimplexVector(std::move(x));
    }
  }
  throw std::runtime_error("StationaryDistribution: power iteration did not converge");
}

SwapPlayer::SwapPlayer(int num_actions, double alpha, double beta)
    : m_(num_actions),
      alpha_(alpha),
      beta_(beta),
      expert_cum_(num_actions, std::vector<double>(num_actions, 0.0)),
      expert_last_(num_actions, std::vector<double>(num_actions, 0.0)),
      strategy_(SimplexVector::Uniform(num_actions)) {
  if (num_actions <= 0) throw std::invalid_argument("SwapPlayer: num_actions <= 0");
}

double SwapPlayer::Alpha(int num_actions, long horizon) {
  if (horizon < 1) throw std::invalid_argument("SwapPlayer::Alpha: horizon < 1");
  return num_actions * std::sqrt(std::log(static_cast<double>(horizon)));
}

double SwapPlayer::Beta(int num_actions) {
  return 1.0 / (2.0 * std::sqrt(static_cast<double>(num_actions)));
}

const SimplexVector& SwapPlayer::Act(double eta) {
  if (awaiting_feed_) {
    throw std::logic_error("SwapPlayer: Act called twice without Feed");
  }
  expert_points_.clear();
  transition_.assign(m_, std::vector<double>(m_, 0.0));
  if (std::isinf(eta)) {
    for (int a = 0; a < m_; ++a) {
      expert_points_.push_back(SimplexVector::Uniform(m_));
      transition_[a].assign(m_, 1.0 / m_);
    }
    strategy_ = SimplexVector::Uniform(m_);
  } else {
    std::vector<double> scores(m_);
    for (int a = 0; a < m_; ++a) {
      for (int b = 0; b < m_; ++b) scores[b] = expert_cum_[a][b] + expert_last_[a][b];
      expert_points_.push_back(LogBarrierArgmax(scores, eta));
      transition_[a] = expert_points_.back().weights();
    }
    strategy_ = StationaryDistribution(transition_, 1e-10);
  }
  awaiting_feed_ = true;
  return strategy_;
}

void SwapPlayer::Feed(std::span<const double> clipped_grad) {
  if (!awaiting_feed_) {
    throw std::logic_error("SwapPlayer: Feed called before Act");
  }
  if (static_cast<int>(clipped_grad.size()) != m_) {
    throw std::invalid_argument("SwapPlayer::Feed: gradient dimension mismatch");
  }
  for (int a = 0; a < m_; ++a) {
    const double xa = strategy_[a];
    for (int b = 0; b < m_; ++b) {
      const double v = xa * clipped_grad[b];
      expert_cum_[a][b] += v;
      expert_last_[a][b] = v;
    }
  }
  awaiting_feed_ = false;
}

}  // namespace sfg

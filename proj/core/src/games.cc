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

#include "sfg/games.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "sfg/rng.h"

namespace sfg {
namespace {

void CheckScale(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("Rescaled: scale factor must be positive and finite");
  }
}

}  // namespace

ZeroSumGame::ZeroSumGame(int num_rows, int num_cols, std::vector<double> payoff)
    : rows_(num_rows), cols_(num_cols), a_(std::move(payoff)) {
  if (rows_ <= 0 || cols_ <= 0) {
    throw std::invalid_argument("ZeroSumGame: nonpositive dimension");
  }
  if (a_.size() != static_cast<std::size_t>(rows_) * cols_) {
    throw std::invalid_argument("ZeroSumGame: payoff size mismatch");
  }
  for (double v : a_) {
    if (!std::isfinite(v)) throw std::invalid_argument("ZeroSumGame: non-finite entry");
  }
}

double ZeroSumGame::MaxAbs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double ZeroSumGame::Range() const {
  const auto [lo, hi] = std::minmax_element(a_.begin(), a_.end());
  return *hi - *lo;
}

std::vector<double> ZeroSumGame::GainGradient(const SimplexVector& y) const {
  if (y.dim() != cols_) throw std::invalid_argument("GainGradient: dimension mismatch");
  std::vector<double> g(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    double s = 0.0;
    const double* row = a_.data() + static_cast<std::size_t>(i) * cols_;
    for (int j = 0; j < cols_; ++j) s += row[j] * y[j];
    g[i] = s;
  }
  return g;
}

std::vector<double> ZeroSumGame::LossGradient(const SimplexVector& x) const {
  if (x.dim() != rows_) throw std::invalid_argument("LossGradient: dimension mismatch");
  std::vector<double> l(cols_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    const double xi = x[i];
    const double* row = a_.data() + static_cast<std::size_t>(i) * cols_;
    for (int j = 0; j < cols_; ++j) l[j] += row[j] * xi;
  }
  return l;
}

ZeroSumGame ZeroSumGame::Rescaled(double c) const {
  CheckScale(c);
  std::vector<double> b(a_);
  for (double& v : b) v *= c;
  return ZeroSumGame(rows_, cols_, std::move(b));
}

ZeroSumGame ZeroSumGame::MatchingPennies() {
  return ZeroSumGame(2, 2, {1.0, -1.0, -1.0, 1.0});
}

ZeroSumGame ZeroSumGame::RockPaperScissors() {
  return ZeroSumGame(3, 3, {0.0, -1.0, 1.0, 1.0, 0.0, -1.0, -1.0, 1.0, 0.0});
}

ZeroSumGame ZeroSumGame::Random(int num_rows, int num_cols, double scale,
                                std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> a(static_cast<std::size_t>(num_rows) * num_cols);
  for (double& v : a) v = rng.Uniform(-scale, scale);
  return ZeroSumGame(num_rows, num_cols, std::move(a));
}

GeneralSumGame::GeneralSumGame(std::vector<int> action_counts,
                               std::vector<std::vector<double>> utilities)
    : counts_(std::move(action_counts)), u_(std::move(utilities)) {
  if (counts_.empty()) throw std::invalid_argument("GeneralSumGame: no players");
  if (u_.size() != counts_.size()) {
    throw std::invalid_argument("GeneralSumGame: one utility tensor per player required");
  }
  joint_size_ = 1;
  for (int m : counts_) {
    if (m <= 0) throw std::invalid_argument("GeneralSumGame: nonpositive action count");
    joint_size_ *= static_cast<std::size_t>(m);
  }
  for (const auto& tensor : u_) {
    if (tensor.size() != joint_size_) {
      throw std::invalid_argument("GeneralSumGame: utility tensor size mismatch");
    }
    for (double v : tensor) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("GeneralSumGame: non-finite utility entry");
      }
    }
  }
}

double GeneralSumGame::Utility(int player, std::span<const int> joint_action) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    idx = idx * counts_[j] + joint_action[j];
  }
  return u_[player][idx];
}

double GeneralSumGame::MaxAbs() const {
  double m = 0.0;
  for (const auto& tensor : u_) {
    for (double v : tensor) m = std::max(m, std::abs(v));
  }
  return m;
}

std::vector<double> GeneralSumGame::ExpectedUtility(
    int player, const std::vector<SimplexVector>& strategies) const {
  const int n = num_players();
  if (static_cast<int>(strategies.size()) != n) {
    throw std::invalid_argument("ExpectedUtility: one strategy per player required");
  }
  for (int j = 0; j < n; ++j) {
    if (strategies[j].dim() != counts_[j]) {
      throw std::invalid_argument("ExpectedUtility: strategy dimension mismatch");
    }
  }
  std::vector<double> out(counts_[player], 0.0);
  // Dense contraction: walk every joint action with an odometer, weighting by
  // the product of the other players' strategy masses.
  std::vector<int> joint(n, 0);
  const std::vector<double>& tensor = u_[player];
  for (std::size_t idx = 0; idx < joint_size_; ++idx) {
    double w = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j != player) w *= strategies[j][joint[j]];
    }
    out[joint[player]] += w * tensor[idx];
    for (int j = n - 1; j >= 0; --j) {
      if (++joint[j] < counts_[j]) break;
      joint[j] = 0;
    }
  }
  return out;
}

GeneralSumGame GeneralSumGame::Rescaled(double c) const {
  CheckScale(c);
  std::vector<std::vector<double>> scaled(u_);
  for (auto& tensor : scaled) {
    for (double& v : tensor) v *= c;
  }
  return GeneralSumGame(counts_, std::move(scaled));
}

GeneralSumGame GeneralSumGame::Random(std::vector<int> action_counts, double scale,
                                      std::uint64_t seed) {
  Rng rng(seed);
  std::size_t joint = 1;
  for (int m : action_counts) joint *= static_cast<std::size_t>(m);
  std::vector<std::vector<double>> u(action_counts.size());
  for (auto& tensor : u) {
    tensor.resize(joint);
    for (double& v : tensor) v = rng.Uniform(-scale, scale);
  }
  return GeneralSumGame(std::move(action_counts), std::move(u));
}

namespace {

using nlohmann::json;

// Flattens a nested JSON array of the given dimensions into row-major order.
void FlattenTensor(const json& node, std::span<const int> dims,
                   std::vector<double>& out) {
  if (dims.empty()) {
    if (!node.is_number()) {
      throw std::invalid_argument("game JSON: expected a number in utility tensor");
    }
    out.push_back(node.get<double>());
    return;
  }
  if (!node.is_array() || static_cast<int>(node.size()) != dims[0]) {
    throw std::invalid_argument("game JSON: tensor shape does not match action_counts");
  }
  for (const auto& child : node) {
    FlattenTensor(child, dims.subspan(1), out);
  }
}

json NestTensor(std::span<const double>& flat, std::span<const int> dims) {
  if (dims.empty()) {
    double v = flat.front();
    flat = flat.subspan(1);
    return json(v);
  }
  json arr = json::array();
  for (int i = 0; i < dims[0]; ++i) arr.push_back(NestTensor(flat, dims.subspan(1)));
  return arr;
}

}  // namespace

Game ParseGameJson(const std::string& json_text) {
  json j = json::parse(json_text);
  const std::string type = j.at("type").get<std::string>();
  if (type == "zero_sum") {
    const json& rows = j.at("payoff");
    if (!rows.is_array() || rows.empty()) {
      throw std::invalid_argument("game JSON: payoff must be a nonempty array of rows");
    }
    const int num_rows = static_cast<int>(rows.size());
    const int num_cols = static_cast<int>(rows[0].size());
    std::vector<double> a;
    a.reserve(static_cast<std::size_t>(num_rows) * num_cols);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != num_cols) {
        throw std::invalid_argument("game JSON: ragged payoff matrix");
      }
      for (const auto& v : row) a.push_back(v.get<double>());
    }
    return ZeroSumGame(num_rows, num_cols, std::move(a));
  }
  if (type == "general_sum") {
    std::vector<int> counts = j.at("action_counts").get<std::vector<int>>();
    const json& players = j.at("utilities");
    if (static_cast<std::size_t>(players.size()) != counts.size()) {
      throw std::invalid_argument("game JSON: utilities must list one tensor per player");
    }
    std::vector<std::vector<double>> u;
    for (const auto& tensor : players) {
      std::vector<double> flat;
      FlattenTensor(tensor, counts, flat);
      u.push_back(std::move(flat));
    }
    return GeneralSumGame(std::move(counts), std::move(u));
  }
  throw std::invalid_argument("game JSON: unknown type \"" + type + "\"");
}

Game LoadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open game file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseGameJson(ss.str());
}

std::string GameToJson(const Game& game) {
  json j;
  if (const auto* zs = std::get_if<ZeroSumGame>(&game)) {
    j["type"] = "zero_sum";
    json rows = json::array();
    for (int i = 0; i < zs->num_rows(); ++i) {
      json row = json::array();
      for (int k = 0; k < zs->num_cols(); ++k) row.push_back(zs->At(i, k));
      rows.push_back(row);
    }
    j["payoff"] = rows;
  } else {
    const auto& gs = std::get<GeneralSumGame>(game);
    j["type"] = "general_sum";
    j["action_counts"] = gs.action_counts();
    json players = json::array();
    for (int i = 0; i < gs.num_players(); ++i) {
      std::span<const double> flat = gs.utility_tensor(i);
      players.push_back(NestTensor(flat, gs.action_counts()));
    }
    j["utilities"] = players;
  }
  return j.dump(2);
}

ZeroSumGame RescaledGame(const ZeroSumGame& g, double c) { return g.Rescaled(c); }

Game RescaledGame(const Game& g, double c) {
  if (const auto* zs = std::get_if<ZeroSumGame>(&g)) return zs->Rescaled(c);
  return std::get<GeneralSumGame>(g).Rescaled(c);
}

}  // namespace sfg

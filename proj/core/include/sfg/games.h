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

#ifndef SFG_GAMES_H_
#define SFG_GAMES_H_

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sfg/simplex.h"

namespace sfg {

// Two-player zero-sum matrix game. The x-player (rows) maximizes x^T A y,
// the y-player (columns) minimizes it. Immutable after construction.
class ZeroSumGame {
 public:
  // payoff is row-major with num_rows * num_cols finite entries.
  ZeroSumGame(int num_rows, int num_cols, std::vector<double> payoff);

  int num_rows() const { return rows_; }
  int num_cols() const { return cols_; }
  double At(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<double>& payoff() const { return a_; }

  // Scale statistics, recomputed from the entries on every call.
  double MaxAbs() const;  // max |A_ij|
  double Range() const;   // max A_ij - min A_ij

  std::vector<double> GainGradient(const SimplexVector& y) const;  // A y
  std::vector<double> LossGradient(const SimplexVector& x) const;  // A^T x

  ZeroSumGame Rescaled(double c) const;

  static ZeroSumGame MatchingPennies();
  static ZeroSumGame RockPaperScissors();
  // Entries i.i.d. uniform in [-scale, scale].
  static ZeroSumGame Random(int num_rows, int num_cols, double scale, std::uint64_t seed);

 private:
  int rows_, cols_;
  std::vector<double> a_;
};

// n-player general-sum game with one dense utility tensor per player,
// stored row-major over joint actions (last player's action fastest).
class GeneralSumGame {
 public:
  GeneralSumGame(std::vector<int> action_counts,
                 std::vector<std::vector<double>> utilities);

  int num_players() const { return static_cast<int>(counts_.size()); }
  const std::vector<int>& action_counts() const { return counts_; }
  double Utility(int player, std::span<const int> joint_action) const;
  const std::vector<double>& utility_tensor(int player) const { return u_[player]; }

  double MaxAbs() const;  // U_max = max_i max |u_i(.)|

  // Expected utility vector of `player`: entry a_i is the expectation of
  // u_i(a_i, a_{-i}) over the other players' mixed strategies.
  std::vector<double> ExpectedUtility(int player,
                                      const std::vector<SimplexVector>& strategies) const;

  GeneralSumGame Rescaled(double c) const;

  // Tensor entries i.i.d. uniform in [-scale, scale].
  static GeneralSumGame Random(std::vector<int> action_counts, double scale,
                               std::uint64_t seed);

 private:
  std::vector<int> counts_;
  std::vector<std::vector<double>> u_;  // [player][flat joint action]
  std::size_t joint_size_;
};

using Game = std::variant<ZeroSumGame, GeneralSumGame>;

// JSON game files:
//   {"type": "zero_sum", "payoff": [[...], ...]}
//   {"type": "general_sum", "action_counts": [m_1, ..., m_n],
//    "utilities": [<nested array of depth n per player>, ...]}
// All numbers are parsed as 64-bit floats. See docs/schema.md.
Game ParseGameJson(const std::string& json_text);
Game LoadGameFile(const std::string& path);
std::string GameToJson(const Game& game);

ZeroSumGame RescaledGame(const ZeroSumGame& g, double c);
Game RescaledGame(const Game& g, double c);

}  // namespace sfg

#endif  // SFG_GAMES_H_

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

#ifndef SFG_PATH_TRACKER_H_
#define SFG_PATH_TRACKER_H_

#include <span>
#include <vector>

namespace sfg {

enum class Norm { kLInf, kL1 };

// Running squared path length of a vector sequence:
//   accumulated = sum_s ||z^s - z^{s-1}||_q^2,  with z^0 = 0.
// Plain 64-bit summation; at desk-scale horizons the accumulated error stays
// far below any tolerance used by the learners or tests.
class PathTracker {
 public:
  explicit PathTracker(Norm q) : q_(q) {}

  // Feeds the next vector of the sequence. The first call fixes the
  // dimension (the implicit previous vector is zero); later calls with a
  // different dimension throw std::invalid_argument.
  void Update(std::span<const double> next);

  double accumulated() const { return accumulated_; }
  Norm norm() const { return q_; }
  const std::vector<double>& prev() const { return prev_; }

 private:
  Norm q_;
  std::vector<double> prev_;
  double accumulated_ = 0.0;
};

}  // namespace sfg

#endif  // SFG_PATH_TRACKER_H_

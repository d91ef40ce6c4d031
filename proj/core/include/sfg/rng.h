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

#ifndef SFG_RNG_H_
#define SFG_RNG_H_

#include <cstdint>
#include <random>

namespace sfg {

// Seeded generator used everywhere randomness is needed. The raw engine is
// the standard 64-bit Mersenne Twister, whose output stream is fully
// specified by the C++ standard; doubles are derived from the top 53 bits so
// that results are reproducible across platforms and standard libraries
// (std::uniform_real_distribution is implementation-defined and is avoided).
// Run reports record kAlgorithmId so external reimplementations can match.
class Rng {
 public:
  static constexpr const char* kAlgorithmId = "mt19937_64/raw53";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in {0, ..., n - 1}.
  int UniformInt(int n) {
    int k = static_cast<int>(Uniform() * n);
    return k < n ? k : n - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sfg

#endif  // SFG_RNG_H_

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

#include "sfg/path_tracker.h"

#include <stdexcept>

#include "sfg/simplex.h"

namespace sfg {

void PathTracker::Update(std::span<const double> next) {
  if (prev_.empty()) {
    prev_.assign(next.size(), 0.0);
  } else if (prev_.size() != next.size()) {
    throw std::invalid_argument("PathTracker::Update: dimension mismatch");
  }
  const double d = q_ == Norm::kLInf ? LInfDistance(next, prev_) : L1Distance(next, prev_);
  accumulated_ += d * d;
  prev_.assign(next.begin(), next.end());
}

}  // namespace sfg

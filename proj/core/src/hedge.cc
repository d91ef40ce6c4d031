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

#include "sfg/hedge.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sfg {

HedgeLearner::HedgeLearner(int dim, Sense sense, RateRule rule)
    : dim_(dim),
      sense_(sense),
      rule_(rule),
      m_const_(MConst(dim)),
      cum_grad_(dim, 0.0),
      last_grad_(dim, 0.0),
      own_path_(Norm::kLInf),
      partner_path_(rule == RateRule::kNoCommunication ? Norm::kL1 : Norm::kLInf) {
  if (dim <= 0) throw std::invalid_argument("HedgeLearner: dim <= 0");
}

double HedgeLearner::MConst(int dim) {
  return std::max(4.0, std::log(static_cast<double>(dim)) / std::pow(2.0, 1.5));
}

double HedgeLearner::CurrentRate() const {
  const double denom = own_path_.accumulated() + partner_path_.accumulated();
  if (denom == 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(m_const_ / denom);
}

SimplexVector HedgeLearner::Act() const {
  const double sign = sense_ == Sense::kMaximize ? 1.0 : -1.0;
  std::vector<double> scores(dim_);
  for (int a = 0; a < dim_; ++a) scores[a] = sign * (cum_grad_[a] + last_grad_[a]);
  return SoftmaxWeighted(scores, CurrentRate());
}

void HedgeLearner::Observe(std::span<const double> own_grad,
                           std::span<const double> partner_signal) {
  if (static_cast<int>(own_grad.size()) != dim_) {
    throw std::invalid_argument("HedgeLearner::Observe: gradient dimension mismatch");
  }
  for (int a = 0; a < dim_; ++a) {
    cum_grad_[a] += own_grad[a];
    last_grad_[a] = own_grad[a];
  }
  own_path_.Update(own_grad);
  partner_path_.Update(partner_signal);
}

SimplexVector AdaHedgeExpertAct(std::span<const double> cum_scores,
                                double path_accumulated, double m_const) {
  const double eta = path_accumulated == 0.0
                         ? std::numeric_limits<double>::infinity()
                         : std::sqrt(m_const / path_accumulated);
  return SoftmaxWeighted(cum_scores, eta);
}

}  // namespace sfg

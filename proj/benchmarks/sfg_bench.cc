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
//
// Microbenchmarks for the building blocks that dominate run time: the
// log-barrier argmax, the stationary-distribution solve, one full optimistic
// Hedge round, one full Algorithm-1 round, and the incremental swap-regret
// evaluation.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "sfg/games.h"
#include "sfg/hedge.h"
#include "sfg/log_barrier.h"
#include "sfg/metrics.h"
#include "sfg/rng.h"
#include "sfg/run.h"
#include "sfg/simplex.h"
#include "sfg/swap.h"

namespace sfg {
namespace {

std::vector<double> RandomScores(Rng& rng, int m, double spread) {
  std::vector<double> v(m);
  for (double& x : v) x = rng.Uniform(-spread, spread);
  return v;
}

void BM_LogBarrierArgmax(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(1);
  const std::vector<double> scores = RandomScores(rng, m, 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(LogBarrierArgmax(scores, 0.5));
  }
}
BENCHMARK(BM_LogBarrierArgmax)->Arg(3)->Arg(10)->Arg(50);

void BM_StationaryDistribution(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(2);
  std::vector<std::vector<double>> q(m, std::vector<double>(m));
  for (auto& row : q) {
    double sum = 0.0;
    for (double& v : row) sum += (v = rng.Uniform(0.01, 1.0));
    for (double& v : row) v /= sum;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(StationaryDistribution(q, 1e-10));
  }
}
BENCHMARK(BM_StationaryDistribution)->Arg(3)->Arg(10)->Arg(50);

// One coupled zero-sum round: two acts, two gradients, two observes.
void BM_HedgeRound(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ZeroSumGame game = ZeroSumGame::Random(m, m, 1.0, 3);
  HedgeLearner x(m, Sense::kMaximize, RateRule::kSharedGradients);
  HedgeLearner y(m, Sense::kMinimize, RateRule::kSharedGradients);
  for (auto _ : state) {
    const SimplexVector xs = x.Act();
    const SimplexVector ys = y.Act();
    const std::vector<double> g = game.GainGradient(ys);
    const std::vector<double> l = game.LossGradient(xs);
    x.Observe(g, l);
    y.Observe(l, g);
    benchmark::DoNotOptimize(xs);
  }
}
BENCHMARK(BM_HedgeRound)->Arg(2)->Arg(10)->Arg(50);

// One full Algorithm-1 round for n players with m actions each: expert-bank
// acts, stationary solves, clipping, and feeds.
void BM_SwapRound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const GeneralSumGame game =
      GeneralSumGame::Random(std::vector<int>(n, m), 1.0, 4);
  GeneralSumDriver driver(std::vector<int>(n, m), 1L << 40, 0.0, true);
  for (auto _ : state) {
    const std::vector<SimplexVector>& strategies = driver.BeginRound();
    std::vector<std::vector<double>> utils(n);
    for (int i = 0; i < n; ++i) utils[i] = game.ExpectedUtility(i, strategies);
    driver.FinishRound(utils);
    benchmark::DoNotOptimize(strategies);
  }
}
BENCHMARK(BM_SwapRound)->Args({2, 3})->Args({3, 3})->Args({2, 10});

void BM_SwapRegretEval(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const long horizon = 1000;
  Rng rng(5);
  Trajectory plays;
  GradientTrajectory utils;
  for (long t = 0; t < horizon; ++t) {
    std::vector<double> w(m);
    for (double& v : w) v = rng.Uniform(0.01, 1.0);
    double sum = 0.0;
    for (double v : w) sum += v;
    for (double& v : w) v /= sum;
    plays.push_back(SimplexVector(w));
    utils.push_back(RandomScores(rng, m, 1.0));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(SwapRegret(plays, utils));
  }
}
BENCHMARK(BM_SwapRegretEval)->Arg(3)->Arg(10);

}  // namespace
}  // namespace sfg

BENCHMARK_MAIN();

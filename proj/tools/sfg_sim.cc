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
// Simulator CLI. Subcommands:
//   zero-sum     optimistic-Hedge self-play on a zero-sum matrix game
//   general-sum  swap-regret dynamics (or the baseline) on a general-sum game
//   scale-sweep  rerun one config across utility scales, certify invariance
//   bound-check  print the closed-form regret-bound values for a game
//
// Exit codes: 0 when every enabled invariant check passes, 1 when any check
// fails, 2 on configuration or runtime errors.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sfg/run.h"

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// --out flag, overridable by SFG_OUT_DIR.
std::string ResolveOutDir(const std::string& flag_value) {
  if (const char* env = std::getenv("SFG_OUT_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return flag_value;
}

void WriteReports(const std::string& out_dir, const std::string& csv,
                  const std::string& summary) {
  if (out_dir.empty()) return;
  std::filesystem::create_directories(out_dir);
  if (!csv.empty()) {
    sfg::WriteFile((std::filesystem::path(out_dir) / "series.csv").string(), csv);
  }
  sfg::WriteFile((std::filesystem::path(out_dir) / "summary.json").string(), summary);
}

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  long horizon = 0;
  long cadence = -1;
};

void AddCommonFlags(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--config", args->config_path, "Run config JSON file")->required();
  cmd->add_option("--out", args->out_dir, "Output directory (series.csv, summary.json)");
  cmd->add_option("--seed", args->seed, "Override the config seed")
      ->each([args](const std::string&) { args->seed_set = true; });
  cmd->add_option("--horizon", args->horizon, "Override the config horizon");
  cmd->add_option("--cadence", args->cadence, "Override the metric cadence");
}

sfg::RunConfig LoadWithOverrides(const CommonArgs& args) {
  sfg::RunConfig config = sfg::LoadRunConfigFile(args.config_path);
  if (args.seed_set) config.seed = args.seed;
  if (args.horizon > 0) config.horizon = args.horizon;
  if (args.cadence >= 0) config.cadence = args.cadence;
  return config;
}

int RunZeroSumCmd(const CommonArgs& args) {
  const auto start = Clock::now();
  sfg::RunConfig config = LoadWithOverrides(args);
  sfg::ZeroSumResult result = sfg::RunZeroSum(config);
  const std::string summary = sfg::BuildZeroSumSummaryJson(config, result, Seconds(start));
  WriteReports(ResolveOutDir(args.out_dir), result.csv, summary);
  std::cout << summary << "\n";

  bool pass = true;
  if (config.x_plan.is_active() || config.y_plan.is_active()) {
    // Corrupted regime: the constant prefix bound is not claimed; check the
    // four regret-variant deltas instead.
    const auto* game = std::get_if<sfg::ZeroSumGame>(&config.game);
    const sfg::RegretVariantReport rx =
        sfg::RegretVariantDeltas(result.ledger_x, game->MaxAbs());
    const sfg::RegretVariantReport ry =
        sfg::RegretVariantDeltas(result.ledger_y, game->MaxAbs());
    pass = rx.deltas_ok && ry.deltas_ok;
    std::cout << (pass ? "PASS" : "FAIL") << " corrupted-regime regret deltas\n";
  } else {
    pass = result.bound_satisfied_every_prefix;
    std::cout << (pass ? "PASS" : "FAIL") << " constant regret bound at every prefix\n";
  }
  return pass ? 0 : 1;
}

int RunGeneralSumCmd(const CommonArgs& args) {
  const auto start = Clock::now();
  sfg::RunConfig config = LoadWithOverrides(args);
  sfg::GeneralSumResult result = sfg::RunGeneralSum(config);
  const std::string summary =
      sfg::BuildGeneralSumSummaryJson(config, result, Seconds(start));
  WriteReports(ResolveOutDir(args.out_dir), result.csv, summary);
  std::cout << summary << "\n";

  if (config.dynamics == sfg::Dynamics::kAdaHedgeBaseline) {
    std::cout << "PASS baseline run (no invariant checks apply)\n";
    return 0;
  }
  const bool pass = result.stats.AllClean();
  std::cout << (pass ? "PASS" : "FAIL") << " clipping/stability invariants\n";
  return pass ? 0 : 1;
}

int RunScaleSweepCmd(const CommonArgs& args) {
  const auto start = Clock::now();
  sfg::RunConfig config = LoadWithOverrides(args);
  sfg::ScaleSweepResult result = sfg::RunScaleSweep(config);
  const std::string summary =
      sfg::BuildScaleSweepSummaryJson(config, result, Seconds(start));
  WriteReports(ResolveOutDir(args.out_dir), "", summary);
  std::cout << summary << "\n";
  std::cout << (result.pass ? "PASS" : "FAIL") << " scale invariance, max deviation "
            << sfg::FormatDouble(result.max_deviation) << "\n";
  return result.pass ? 0 : 1;
}

int RunBoundCheckCmd(const CommonArgs& args) {
  sfg::RunConfig config = LoadWithOverrides(args);
  const auto* game = std::get_if<sfg::ZeroSumGame>(&config.game);
  if (game == nullptr) {
    std::cerr << "bound-check requires a zero-sum game\n";
    return 2;
  }
  const sfg::BoundVariant variant = config.dynamics == sfg::Dynamics::kOptHedgeNoComm
                                        ? sfg::BoundVariant::kNoCommZeroSum
                                        : sfg::BoundVariant::kHonestZeroSum;
  const sfg::TheoreticalBounds b = sfg::ComputeBounds(
      game->Range(), game->num_rows(), game->num_cols(), config.horizon, variant);
  std::cout << "bound_x      " << sfg::FormatDouble(b.bound_x) << "\n"
            << "bound_y      " << sfg::FormatDouble(b.bound_y) << "\n"
            << "nash_gap/T   " << sfg::FormatDouble(b.nash_gap_bound) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scale-free learning dynamics simulator for matrix games"};
  app.require_subcommand(1);

  CommonArgs zs_args, gs_args, sweep_args, bound_args;
  CLI::App* zs = app.add_subcommand("zero-sum", "Optimistic-Hedge self-play");
  AddCommonFlags(zs, &zs_args);
  CLI::App* gs = app.add_subcommand("general-sum", "Swap-regret dynamics");
  AddCommonFlags(gs, &gs_args);
  CLI::App* sweep = app.add_subcommand("scale-sweep", "Scale-invariance certification");
  AddCommonFlags(sweep, &sweep_args);
  CLI::App* bound = app.add_subcommand("bound-check", "Print closed-form bound values");
  AddCommonFlags(bound, &bound_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (zs->parsed()) return RunZeroSumCmd(zs_args);
    if (gs->parsed()) return RunGeneralSumCmd(gs_args);
    if (sweep->parsed()) return RunScaleSweepCmd(sweep_args);
    if (bound->parsed()) return RunBoundCheckCmd(bound_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

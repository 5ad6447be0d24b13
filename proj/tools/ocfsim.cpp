// Copyright 2026 The ocfsim Authors
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

// ocfsim: run repeated overlapping coalition formation experiments.
//
//   ocfsim run    --config exp.json --out results/ [--jobs N] [--seed-offset M]
//   ocfsim topics --config exp.json --checkpoints 100,200 --out topics/
//   ocfsim game   --config exp.json --out game.json [--seed S]

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ocf/harness.hpp"

namespace {

namespace fs = std::filesystem;

int run_command(const std::string& config_path, const fs::path& out_dir, int jobs,
                std::uint64_t seed_offset) {
  const auto config = ocf::load_experiment_config(config_path);
  ocf::ExperimentOptions options;
  options.jobs = jobs;
  options.seed_offset = seed_offset;
  options.rounds_dir = out_dir;
  const auto rows = ocf::run_experiment(config, options);

  fs::create_directories(out_dir);
  {
    std::ofstream out(out_dir / "metrics.csv");
    ocf::write_metrics_csv(out, rows);
  }
  const auto means = ocf::grid_means(rows);
  {
    std::ofstream out(out_dir / "summary.csv");
    ocf::write_metrics_csv(out, means);
  }
  ocf::write_metrics_csv(std::cout, means);
  return 0;
}

int topics_command(const std::string& config_path, const std::vector<int>& checkpoints,
                   const fs::path& out_dir, std::uint64_t seed_offset) {
  const auto config = ocf::load_experiment_config(config_path);
  const auto files = ocf::run_topic_dumps(config, checkpoints, out_dir, seed_offset);
  for (const auto& f : files) std::cout << f.string() << '\n';
  return 0;
}

int game_command(const std::string& config_path, const fs::path& out, std::uint64_t seed) {
  const auto config = ocf::load_experiment_config(config_path);
  const auto game = ocf::game_for_seed(config, seed);
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  std::ofstream file(out);
  file << ocf::serialize_game(game) << '\n';
  return file ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Repeated overlapping coalition formation simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::uint64_t seed_offset = 0;

  auto* run = app.add_subcommand("run", "Run every strategy grid point over all seeds");
  run->add_option("--config", config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--jobs", jobs, "Concurrent game instances")->check(CLI::PositiveNumber);
  run->add_option("--seed-offset", seed_offset, "Added to every run seed");

  std::vector<int> checkpoints;
  auto* topics = app.add_subcommand("topics", "Dump OVERPRO topic matrices at checkpoints");
  topics->add_option("--config", config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  topics->add_option("--checkpoints", checkpoints, "Iterations to dump at")->delimiter(',')->required();
  topics->add_option("--out", out_dir, "Output directory")->required();
  topics->add_option("--seed-offset", seed_offset, "Added to the run seed");

  std::uint64_t game_seed = 1;
  auto* game = app.add_subcommand("game", "Write the generated game of a seed as JSON");
  game->add_option("--config", config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  game->add_option("--out", out_dir, "Output file")->required();
  game->add_option("--seed", game_seed, "Run seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return run_command(config_path, out_dir, jobs, seed_offset);
    if (*topics) return topics_command(config_path, checkpoints, out_dir, seed_offset);
    if (*game) return game_command(config_path, out_dir, game_seed);
  } catch (const std::exception& e) {
    std::cerr << "ocfsim: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

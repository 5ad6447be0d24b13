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

#ifndef OCF_HARNESS_HPP
#define OCF_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocf/agents/factory.hpp"
#include "ocf/documents.hpp"
#include "ocf/kernels.hpp"
#include "ocf/protocol.hpp"
#include "ocf/rr_engine.hpp"

namespace ocf {

/// Experiment description, read from a JSON object:
///
///   {
///     "n": 50, "iterations": 1000, "rule_count": 500,
///     "value_mean": 0, "value_sigma": 100,
///     "endowment_low": 475, "endowment_high": 525, "max_rule_size": 4,
///     "noise_prob": 0.05, "noise_sigma": 5,
///     "runs": 75, "base_seed": 1,            // or "seeds": [..]
///     "strategies": [{"name": "overpro", "K": 15, "tau0": 200, "kappa": 0.9},
///                    {"name": "greedy", "k": 15},
///                    {"name": "qlearning", "delta_base": 0.95}],
///     "schedules": {"z_start": 1, "z_end": 0.001, "c_start": 1, "c_end": 0.5},
///     "checkpoints": [500, 1000], "topic_agents": [7],
///     "write_rounds": false
///   }
///
/// Every key is optional except "strategies". Each grid point runs against
/// the same sequence of seeded games, so strategies are compared on paired
/// instances.
struct ExperimentConfig {
  GameGenParams game;
  int iterations = 1000;
  int runs = 1;
  std::uint64_t base_seed = 1;
  std::vector<std::uint64_t> seeds;
  std::vector<StrategySpec> grid;
  Schedules schedules;
  std::vector<int> checkpoints;
  std::vector<int> topic_agents;
  bool write_rounds = false;

  std::uint64_t seed_for_run(int run, std::uint64_t offset = 0) const;
  void validate() const;
};

ExperimentConfig parse_experiment_config(std::string_view json_text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// One row of metrics.csv.
struct MetricsRow {
  std::string run_id;
  std::string strategy;
  std::string params;
  double sw = 0.0;
  double participation = 0.0;
  double efficiency = 0.0;
  /// Wall time per agent per iteration.
  double time_s = 0.0;

  std::size_t grid_index = 0;
  int run_index = 0;
  std::uint64_t seed = 0;
};

MetricsRow metrics_from_totals(const GameTotals& totals);

/// The random game used by every grid point for a given run seed.
RRGame game_for_seed(const ExperimentConfig& config, std::uint64_t seed);

/// Game configuration of one (grid point, seed) cell.
GameConfig game_config_for(const ExperimentConfig& config, std::size_t grid_index,
                           std::uint64_t seed);

struct ExperimentOptions {
  int jobs = 1;
  std::uint64_t seed_offset = 0;
  /// When set together with config.write_rounds, rounds.ndjson goes here.
  std::filesystem::path rounds_dir;
};

/// Runs every grid point x run. Rows are ordered by (grid point, run).
std::vector<MetricsRow> run_experiment(const ExperimentConfig& config,
                                       const ExperimentOptions& options = {});

/// Arithmetic means per grid point, run_id "mean".
std::vector<MetricsRow> grid_means(std::span<const MetricsRow> rows);

inline constexpr std::string_view kMetricsHeader =
    "run_id,strategy,params,sw,participation,efficiency,time_s";

/// CSV with kMetricsHeader; floats printed with 6 significant digits.
void write_metrics_csv(std::ostream& out, std::span<const MetricsRow> rows);
std::vector<MetricsRow> read_metrics_csv(std::istream& in);

/// Writes topics_<agent>_<t>.json (K rows of n+2 labelled probabilities).
std::filesystem::path dump_topics(const TopicMatrix& beta, const Vocabulary& vocab,
                                  AgentId agent, int t, const std::filesystem::path& dir);

/// Dumps every strategy that exposes topics; `agents` empty means all.
std::vector<std::filesystem::path> dump_topics(std::span<const std::unique_ptr<Strategy>> strategies,
                                               int t, std::span<const int> agents,
                                               const std::filesystem::path& dir);

/// Runs the first overpro grid point on run 0 and dumps topics at every
/// checkpoint. Returns the written files.
std::vector<std::filesystem::path> run_topic_dumps(const ExperimentConfig& config,
                                                   std::span<const int> checkpoints,
                                                   const std::filesystem::path& dir,
                                                   std::uint64_t seed_offset = 0);

}  // namespace ocf

#endif  // OCF_HARNESS_HPP

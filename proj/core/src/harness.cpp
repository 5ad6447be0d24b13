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

#include "ocf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "ocf/rng.hpp"

namespace ocf {

using nlohmann::json;

std::uint64_t ExperimentConfig::seed_for_run(int run, std::uint64_t offset) const {
  const auto r = static_cast<std::size_t>(run);
  const std::uint64_t base = r < seeds.size() ? seeds[r] : base_seed + r;
  return base + offset;
}

void ExperimentConfig::validate() const {
  game.validate();
  if (iterations < 0) throw InvalidArgument("iterations must be >= 0");
  if (runs < 1) throw InvalidArgument("runs must be >= 1");
  if (grid.empty()) throw InvalidArgument("at least one strategy grid point is required");
  for (const auto& spec : grid) spec.validate();
  Schedules s = schedules;
  s.iterations = std::max(iterations, 1);
  s.validate();
  for (int agent : topic_agents) {
    if (agent < 1 || agent > game.n) throw InvalidArgument("topic agent outside 1..n");
  }
}

namespace {

template <typename T>
void read_opt(const json& doc, const char* key, T& out) {
  if (doc.contains(key)) out = doc.at(key).get<T>();
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidArgument("config must be a JSON object");

  ExperimentConfig cfg;
  try {
    read_opt(doc, "n", cfg.game.n);
    read_opt(doc, "rule_count", cfg.game.rule_count);
    read_opt(doc, "value_mean", cfg.game.value_mean);
    read_opt(doc, "value_sigma", cfg.game.value_sigma);
    read_opt(doc, "endowment_low", cfg.game.endowment_low);
    read_opt(doc, "endowment_high", cfg.game.endowment_high);
    read_opt(doc, "max_rule_size", cfg.game.max_rule_size);
    read_opt(doc, "noise_prob", cfg.game.noise_prob);
    read_opt(doc, "noise_sigma", cfg.game.noise_sigma);
    read_opt(doc, "iterations", cfg.iterations);
    read_opt(doc, "runs", cfg.runs);
    read_opt(doc, "base_seed", cfg.base_seed);
    read_opt(doc, "seeds", cfg.seeds);
    read_opt(doc, "checkpoints", cfg.checkpoints);
    read_opt(doc, "topic_agents", cfg.topic_agents);
    read_opt(doc, "write_rounds", cfg.write_rounds);
    if (doc.contains("schedules")) {
      const auto& s = doc.at("schedules");
      read_opt(s, "z_start", cfg.schedules.z_start);
      read_opt(s, "z_end", cfg.schedules.z_end);
      read_opt(s, "c_start", cfg.schedules.c_start);
      read_opt(s, "c_end", cfg.schedules.c_end);
    }
    if (!cfg.seeds.empty() && !doc.contains("runs")) cfg.runs = static_cast<int>(cfg.seeds.size());
    for (const auto& entry : doc.at("strategies")) {
      StrategySpec spec;
      spec.name = entry.at("name").get<std::string>();
      for (const auto& [key, value] : entry.items()) {
        if (key == "name") continue;
        if (value.is_boolean()) {
          spec.params[key] = value.get<bool>() ? 1.0 : 0.0;
        } else {
          spec.params[key] = value.get<double>();
        }
      }
      cfg.grid.push_back(std::move(spec));
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

MetricsRow metrics_from_totals(const GameTotals& totals) {
  MetricsRow row;
  row.sw = static_cast<double>(totals.welfare);
  row.participation = totals.participation();
  row.efficiency = totals.efficiency();
  return row;
}

RRGame game_for_seed(const ExperimentConfig& config, std::uint64_t seed) {
  Rng rng = make_stream(seed, kGameStream);
  return generate_random_game(config.game, rng);
}

GameConfig game_config_for(const ExperimentConfig& config, std::size_t grid_index,
                           std::uint64_t seed) {
  GameConfig game{game_for_seed(config, seed), config.iterations, {config.grid.at(grid_index)},
                  seed, config.schedules};
  game.schedules.iterations = std::max(config.iterations, 1);
  return game;
}

namespace {

std::string run_id_for(std::size_t grid_index, int run) {
  return "g" + std::to_string(grid_index) + "-r" + std::to_string(run);
}

}  // namespace

std::vector<MetricsRow> run_experiment(const ExperimentConfig& config,
                                       const ExperimentOptions& options) {
  config.validate();
  const bool rounds = config.write_rounds && !options.rounds_dir.empty();
  const std::size_t tasks = config.grid.size() * static_cast<std::size_t>(config.runs);
  std::vector<MetricsRow> rows(tasks);
  std::vector<std::string> round_logs(rounds ? tasks : 0);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t task = next++; task < tasks; task = next++) {
      try {
        const std::size_t g = task / static_cast<std::size_t>(config.runs);
        const int run = static_cast<int>(task % static_cast<std::size_t>(config.runs));
        const std::uint64_t seed = config.seed_for_run(run, options.seed_offset);
        const GameConfig game = game_config_for(config, g, seed);
        const std::string run_id = run_id_for(g, run);

        RunOptions run_options;
        run_options.keep_rounds = false;
        std::string log;
        if (rounds) {
          run_options.on_round = [&](const RoundRecord& r, auto) {
            std::string line = round_to_json(r);
            log += "{\"run_id\":\"" + run_id + "\"," + line.substr(1) + "\n";
          };
        }
        const auto start = std::chrono::steady_clock::now();
        const GameLog result = run_game(game, run_options);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

        MetricsRow row = metrics_from_totals(result.totals);
        row.run_id = run_id;
        row.strategy = config.grid[g].name;
        row.params = config.grid[g].label();
        const double agent_iters =
            static_cast<double>(config.game.n) * std::max(config.iterations, 1);
        row.time_s = elapsed.count() / agent_iters;
        row.grid_index = g;
        row.run_index = run;
        row.seed = seed;
        rows[task] = std::move(row);
        if (rounds) round_logs[task] = std::move(log);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks;
      }
    }
  };

  const int jobs = std::clamp(options.jobs, 1, static_cast<int>(std::max<std::size_t>(tasks, 1)));
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  if (rounds) {
    std::filesystem::create_directories(options.rounds_dir);
    std::ofstream out(options.rounds_dir / "rounds.ndjson");
    if (!out) throw std::runtime_error("cannot write rounds.ndjson");
    for (const auto& log : round_logs) out << log;
  }
  return rows;
}

std::vector<MetricsRow> grid_means(std::span<const MetricsRow> rows) {
  std::map<std::size_t, std::vector<const MetricsRow*>> groups;
  for (const auto& row : rows) groups[row.grid_index].push_back(&row);
  std::vector<MetricsRow> out;
  for (const auto& [g, members] : groups) {
    MetricsRow mean;
    mean.run_id = "mean";
    mean.strategy = members.front()->strategy;
    mean.params = members.front()->params;
    mean.grid_index = g;
    for (const auto* r : members) {
      mean.sw += r->sw;
      mean.participation += r->participation;
      mean.efficiency += r->efficiency;
      mean.time_s += r->time_s;
    }
    const double count = static_cast<double>(members.size());
    mean.sw /= count;
    mean.participation /= count;
    mean.efficiency /= count;
    mean.time_s /= count;
    out.push_back(std::move(mean));
  }
  return out;
}

namespace {

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

void write_metrics_csv(std::ostream& out, std::span<const MetricsRow> rows) {
  out << kMetricsHeader << '\n';
  for (const auto& r : rows) {
    out << r.run_id << ',' << r.strategy << ',' << r.params << ',' << fmt6(r.sw) << ','
        << fmt6(r.participation) << ',' << fmt6(r.efficiency) << ',' << fmt6(r.time_s) << '\n';
  }
}

std::vector<MetricsRow> read_metrics_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMetricsHeader) {
    throw InvalidArgument("metrics.csv header mismatch");
  }
  std::vector<MetricsRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 7) throw InvalidArgument("metrics.csv row needs 7 columns");
    MetricsRow row;
    row.run_id = cells[0];
    row.strategy = cells[1];
    row.params = cells[2];
    row.sw = std::stod(cells[3]);
    row.participation = std::stod(cells[4]);
    row.efficiency = std::stod(cells[5]);
    row.time_s = std::stod(cells[6]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::filesystem::path dump_topics(const TopicMatrix& beta, const Vocabulary& vocab,
                                  AgentId agent, int t, const std::filesystem::path& dir) {
  if (beta.vocab_size() != vocab.size()) {
    throw InvalidArgument("topic matrix width differs from the vocabulary");
  }
  json rows = json::array();
  for (int k = 0; k < beta.topics(); ++k) {
    std::vector<double> row(static_cast<std::size_t>(beta.vocab_size()));
    for (int w = 0; w < beta.vocab_size(); ++w) row[static_cast<std::size_t>(w)] = beta(k, w);
    rows.push_back(std::move(row));
  }
  const json doc = {{"agent", agent.index}, {"t", t},
                    {"K", beta.topics()},   {"words", vocab.labels()},
                    {"topics", std::move(rows)}};
  std::filesystem::create_directories(dir);
  const auto path =
      dir / ("topics_" + std::to_string(agent.index) + "_" + std::to_string(t) + ".json");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump() << '\n';
  return path;
}

std::vector<std::filesystem::path> dump_topics(std::span<const std::unique_ptr<Strategy>> strategies,
                                               int t, std::span<const int> agents,
                                               const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& s : strategies) {
    const AgentId agent = s->self();
    if (!agents.empty() && std::find(agents.begin(), agents.end(), agent.index) == agents.end()) {
      continue;
    }
    if (const TopicMatrix* beta = s->topic_matrix()) {
      out.push_back(dump_topics(*beta, Vocabulary{s->setup().n}, agent, t, dir));
    }
  }
  return out;
}

std::vector<std::filesystem::path> run_topic_dumps(const ExperimentConfig& config,
                                                   std::span<const int> checkpoints,
                                                   const std::filesystem::path& dir,
                                                   std::uint64_t seed_offset) {
  config.validate();
  auto it = std::find_if(config.grid.begin(), config.grid.end(),
                         [](const StrategySpec& s) { return s.name == "overpro"; });
  if (it == config.grid.end()) throw InvalidArgument("topic dumps need an overpro grid point");
  for (int t : checkpoints) {
    if (t < 1 || t > config.iterations) throw InvalidArgument("checkpoint outside [1, I]");
  }
  std::vector<std::filesystem::path> written;
  if (checkpoints.empty()) return written;

  const auto grid_index = static_cast<std::size_t>(it - config.grid.begin());
  const GameConfig game = game_config_for(config, grid_index, config.seed_for_run(0, seed_offset));
  RunOptions options;
  options.keep_rounds = false;
  options.on_round = [&](const RoundRecord& round,
                         std::span<const std::unique_ptr<Strategy>> strategies) {
    if (std::find(checkpoints.begin(), checkpoints.end(), round.t) == checkpoints.end()) return;
    auto files = dump_topics(strategies, round.t, config.topic_agents, dir);
    written.insert(written.end(), files.begin(), files.end());
  };
  run_game(game, options);
  return written;
}

}  // namespace ocf

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

#ifndef OCF_PROTOCOL_HPP
#define OCF_PROTOCOL_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ocf/agents/factory.hpp"
#include "ocf/agents/strategy.hpp"
#include "ocf/kernels.hpp"
#include "ocf/rr_engine.hpp"
#include "ocf/types.hpp"

namespace ocf {

struct Decision {
  std::size_t proposal = 0;
  AgentId responder;
  bool accepted = false;
  /// Rejected by the engine because the demand exceeded the endowment.
  bool auto_rejected = false;
};

struct Payoff {
  AgentId agent;
  double amount = 0.0;
};

struct FormedCoalition {
  std::size_t proposal = 0;
  Coalition contributions;
  Utility realized_value = 0;
  std::vector<Payoff> payoffs;
};

struct RoundRecord {
  int t = 0;
  AgentId proposer;
  std::vector<Proposal> proposals;
  std::vector<Decision> decisions;
  std::vector<FormedCoalition> formed;
  /// Per-agent utility earned this round (slot-indexed).
  std::vector<double> utility;

  Utility welfare() const;
  /// Sum over formed coalitions of the member count.
  std::int64_t memberships() const;
  /// Sum over formed coalitions of all contributions.
  std::int64_t invested() const;
};

/// Uniform over 1..n. Throws for n < 2.
AgentId select_proposer(int n, Rng& rng);

struct ResolvedCoalition {
  std::size_t proposal = 0;
  Coalition coalition;
};

/// Unanimity: a proposal forms iff every demanded agent accepted it.
/// `decisions` must cover every (proposal, demanded agent) pair. Throws
/// ProtocolViolation if an agent's accepted demands exceed its endowment.
std::vector<ResolvedCoalition> resolve(std::span<const Proposal> proposals,
                                       std::span<const Decision> decisions,
                                       std::span<const int> endowments);

/// u_{i,C} = u_C * r_{i,C} / sum_j r_{j,C}.
std::vector<Payoff> allocate_payoffs(Utility value, const Coalition& contributions);

using StrategyList = std::vector<std::unique_ptr<Strategy>>;

/// Independent engine and per-agent random streams derived from one seed.
struct Streams {
  /// Proposer selection only, so the order of proposers does not depend on
  /// what the strategies do.
  Rng engine;
  /// Noise draws of coalition valuation.
  Rng valuation;
  std::vector<Rng> agents;  ///< slot-indexed

  static Streams from_seed(std::uint64_t seed, int n);
};

/// One protocol round: proposer selection, proposal routing, unanimity
/// formation, valuation, proportional payoffs and private observations.
/// Endowments are implicitly replenished since nothing carries over.
RoundRecord run_iteration(int t, const RRGame& game, std::span<const std::unique_ptr<Strategy>> strategies,
                          Streams& streams);

struct GameConfig {
  RRGame game;
  int iterations = 1000;
  /// One spec for a homogeneous population, or one per agent.
  std::vector<StrategySpec> strategies;
  std::uint64_t seed = 1;
  /// Schedule shapes; `iterations` is overwritten from the config.
  Schedules schedules;
};

struct GameTotals {
  int n = 0;
  int iterations = 0;
  Utility welfare = 0;
  std::int64_t memberships = 0;
  std::int64_t invested = 0;

  void add(const RoundRecord& round);
  /// Coalitions joined per agent per iteration.
  double participation() const;
  /// welfare / invested; 0 when nothing was invested.
  double efficiency() const;
};

struct GameLog {
  std::vector<RoundRecord> rounds;
  GameTotals totals;
};

struct RunOptions {
  bool keep_rounds = true;
  /// Called after every round with the strategies in their post-observe
  /// state.
  std::function<void(const RoundRecord&, std::span<const std::unique_ptr<Strategy>>)> on_round;
};

/// Builds the strategies from config.strategies and runs I rounds.
GameLog run_game(const GameConfig& config, const RunOptions& options = {});

/// Runs I rounds with caller-built strategies (one per agent, slot order).
GameLog run_game(const RRGame& game, int iterations, std::span<const std::unique_ptr<Strategy>> strategies,
                 Streams& streams, const RunOptions& options = {});

/// Builds one strategy per agent from the config using the agent streams.
StrategyList build_strategies(const GameConfig& config, Streams& streams);

/// Single-line JSON record of a round (rounds.ndjson schema).
std::string round_to_json(const RoundRecord& round);

}  // namespace ocf

#endif  // OCF_PROTOCOL_HPP

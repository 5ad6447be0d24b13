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

#include "ocf/protocol.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "json.hpp"
#include "ocf/rng.hpp"

namespace ocf {

Utility RoundRecord::welfare() const {
  Utility sum = 0;
  for (const auto& f : formed) sum += f.realized_value;
  return sum;
}

std::int64_t RoundRecord::memberships() const {
  std::int64_t sum = 0;
  for (const auto& f : formed) sum += static_cast<std::int64_t>(f.contributions.size());
  return sum;
}

std::int64_t RoundRecord::invested() const {
  std::int64_t sum = 0;
  for (const auto& f : formed) sum += f.contributions.total();
  return sum;
}

AgentId select_proposer(int n, Rng& rng) {
  if (n < 2) throw InvalidArgument("the protocol needs at least two agents");
  return AgentId{uniform_int(rng, 1, n)};
}

std::vector<ResolvedCoalition> resolve(std::span<const Proposal> proposals,
                                       std::span<const Decision> decisions,
                                       std::span<const int> endowments) {
  const std::size_t n = endowments.size();
  auto slot_of = [&](std::size_t id) -> std::size_t {
    for (std::size_t i = 0; i < proposals.size(); ++i) {
      if (proposals[i].id == id) return i;
    }
    throw InvalidArgument("decision refers to an unknown proposal");
  };

  // pending[p] counts demanded agents that have not accepted proposal p.
  std::vector<int> pending(proposals.size(), 0);
  std::vector<int> answered(proposals.size(), 0);
  for (std::size_t i = 0; i < proposals.size(); ++i) {
    pending[i] = static_cast<int>(proposals[i].demanded_agents().size());
  }
  std::vector<std::int64_t> committed(n, 0);
  for (const auto& d : decisions) {
    const std::size_t p = proposals.size() > d.proposal && proposals[d.proposal].id == d.proposal
                              ? d.proposal
                              : slot_of(d.proposal);
    const int demand = proposals[p].demand_on(d.responder);
    if (demand <= 0) throw InvalidArgument("decision from an agent the proposal does not name");
    ++answered[p];
    if (d.accepted) {
      --pending[p];
      committed[d.responder.slot()] += demand;
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (committed[s] > endowments[s]) {
      throw ProtocolViolation("agent " + std::to_string(s + 1) +
                              " accepted demands above its endowment");
    }
  }

  std::vector<ResolvedCoalition> out;
  for (std::size_t i = 0; i < proposals.size(); ++i) {
    const auto demanded = static_cast<int>(proposals[i].demanded_agents().size());
    if (answered[i] != demanded) {
      throw InvalidArgument("every demanded agent must answer proposal " +
                            std::to_string(proposals[i].id));
    }
    if (pending[i] == 0) out.push_back({proposals[i].id, proposals[i].as_coalition()});
  }
  return out;
}

std::vector<Payoff> allocate_payoffs(Utility value, const Coalition& contributions) {
  if (contributions.empty()) throw InvalidArgument("cannot split value over no members");
  const double total = static_cast<double>(contributions.total());
  std::vector<Payoff> out;
  out.reserve(contributions.size());
  for (const auto& m : contributions.members()) {
    out.push_back({m.agent, static_cast<double>(value) * m.amount / total});
  }
  return out;
}

Streams Streams::from_seed(std::uint64_t seed, int n) {
  Streams s{make_stream(seed, kEngineStream), make_stream(seed, kValuationStream), {}};
  s.agents.reserve(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) s.agents.push_back(make_stream(seed, static_cast<std::uint64_t>(a)));
  return s;
}

RoundRecord run_iteration(int t, const RRGame& game,
                          std::span<const std::unique_ptr<Strategy>> strategies,
                          Streams& streams) {
  const int n = game.n();
  if (static_cast<int>(strategies.size()) != n || static_cast<int>(streams.agents.size()) != n) {
    throw InvalidArgument("one strategy and one stream per agent are required");
  }
  RoundRecord record;
  record.t = t;
  record.utility.assign(static_cast<std::size_t>(n), 0.0);
  record.proposer = select_proposer(n, streams.engine);
  const AgentId proposer = record.proposer;

  record.proposals = strategies[proposer.slot()]->propose(t, streams.agents[proposer.slot()]);
  std::int64_t offered = 0;
  for (std::size_t i = 0; i < record.proposals.size(); ++i) {
    auto& p = record.proposals[i];
    p.id = i;
    if (p.proposer != proposer) throw ProtocolViolation("proposal issued for another proposer");
    try {
      p.validate(n);
    } catch (const InvalidArgument& e) {
      throw ProtocolViolation(std::string("malformed proposal: ") + e.what());
    }
    offered += p.offer;
  }
  if (offered > game.endowment(proposer)) {
    throw ProtocolViolation("proposer " + std::to_string(proposer.index) +
                            " offered more than its endowment");
  }

  // Route proposals; each responder decides on its feasible ones as a batch.
  std::vector<Proposal> incoming;
  std::vector<std::size_t> incoming_ids;
  for (int a = 1; a <= n; ++a) {
    const AgentId responder{a};
    if (responder == proposer) continue;
    incoming.clear();
    incoming_ids.clear();
    const int endowment = game.endowment(responder);
    for (const auto& p : record.proposals) {
      const int demand = p.demand_on(responder);
      if (demand <= 0) continue;
      if (demand > endowment) {
        record.decisions.push_back({p.id, responder, false, true});
        continue;
      }
      incoming.push_back(p);
      incoming_ids.push_back(p.id);
    }
    if (incoming.empty()) continue;
    const auto answers =
        strategies[responder.slot()]->respond(t, incoming, streams.agents[responder.slot()]);
    if (answers.size() != incoming.size()) {
      throw ProtocolViolation("agent " + std::to_string(a) + " did not answer every proposal");
    }
    for (std::size_t i = 0; i < incoming.size(); ++i) {
      record.decisions.push_back({incoming_ids[i], responder, answers[i], false});
    }
  }
  std::sort(record.decisions.begin(), record.decisions.end(),
            [](const Decision& x, const Decision& y) {
              return x.proposal != y.proposal ? x.proposal < y.proposal
                                              : x.responder < y.responder;
            });

  auto resolved = resolve(record.proposals, record.decisions, game.endowments());

  std::vector<std::vector<Observation>> observations(static_cast<std::size_t>(n));
  for (auto& r : resolved) {
    FormedCoalition f;
    f.proposal = r.proposal;
    f.realized_value = realized_coalition_value(game, r.coalition, streams.valuation);
    f.payoffs = allocate_payoffs(f.realized_value, r.coalition);
    for (const auto& pay : f.payoffs) record.utility[pay.agent.slot()] += pay.amount;
    for (const auto& m : r.coalition.members()) {
      observations[m.agent.slot()].push_back({r.coalition, f.realized_value});
    }
    f.contributions = std::move(r.coalition);
    record.formed.push_back(std::move(f));
  }

  for (std::size_t s = 0; s < static_cast<std::size_t>(n); ++s) {
    strategies[s]->observe(t, observations[s]);
  }
  return record;
}

void GameTotals::add(const RoundRecord& round) {
  welfare += round.welfare();
  memberships += round.memberships();
  invested += round.invested();
}

double GameTotals::participation() const {
  if (n <= 0 || iterations <= 0) return 0.0;
  return static_cast<double>(memberships) / (static_cast<double>(n) * iterations);
}

double GameTotals::efficiency() const {
  if (invested == 0) return 0.0;
  return static_cast<double>(welfare) / static_cast<double>(invested);
}

StrategyList build_strategies(const GameConfig& config, Streams& streams) {
  const int n = config.game.n();
  if (config.strategies.size() != 1 && static_cast<int>(config.strategies.size()) != n) {
    throw InvalidArgument("strategy assignment needs one spec or one per agent");
  }
  Schedules schedules = config.schedules;
  schedules.iterations = config.iterations;
  const auto endowments = config.game.endowments();
  const double mean_endowment =
      std::accumulate(endowments.begin(), endowments.end(), 0.0) / n;

  StrategyList out;
  out.reserve(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    const auto& spec = config.strategies.size() == 1
                           ? config.strategies.front()
                           : config.strategies[static_cast<std::size_t>(a - 1)];
    AgentSetup setup{AgentId{a}, n, config.game.endowment(AgentId{a}), schedules};
    out.push_back(make_strategy(spec, setup, streams.agents[static_cast<std::size_t>(a - 1)],
                                mean_endowment));
  }
  return out;
}

GameLog run_game(const RRGame& game, int iterations,
                 std::span<const std::unique_ptr<Strategy>> strategies, Streams& streams,
                 const RunOptions& options) {
  GameLog log;
  log.totals.n = game.n();
  log.totals.iterations = std::max(iterations, 0);
  for (int t = 1; t <= iterations; ++t) {
    RoundRecord round = run_iteration(t, game, strategies, streams);
    log.totals.add(round);
    if (options.on_round) options.on_round(round, strategies);
    if (options.keep_rounds) log.rounds.push_back(std::move(round));
  }
  return log;
}

GameLog run_game(const GameConfig& config, const RunOptions& options) {
  if (config.iterations < 0) throw InvalidArgument("iterations must be >= 0");
  if (config.iterations == 0) {
    GameLog log;
    log.totals.n = config.game.n();
    return log;
  }
  Streams streams = Streams::from_seed(config.seed, config.game.n());
  const StrategyList strategies = build_strategies(config, streams);
  return run_game(config.game, config.iterations, strategies, streams, options);
}

std::string round_to_json(const RoundRecord& round) {
  using nlohmann::json;
  json proposals = json::array();
  for (const auto& p : round.proposals) {
    json demands = json::array();
    for (AgentId a : p.demanded_agents()) demands.push_back({a.index, p.demand_on(a)});
    proposals.push_back({{"id", p.id},
                         {"offer", p.offer},
                         {"kind", p.kind == ProposalKind::kExploration ? "explore" : "exploit"},
                         {"demands", std::move(demands)}});
  }
  json decisions = json::array();
  for (const auto& d : round.decisions) {
    decisions.push_back({d.proposal, d.responder.index, d.accepted ? 1 : 0});
  }
  json formed = json::array();
  for (const auto& f : round.formed) {
    json members = json::array();
    json payoffs = json::array();
    for (const auto& m : f.contributions.members()) members.push_back({m.agent.index, m.amount});
    for (const auto& p : f.payoffs) payoffs.push_back(p.amount);
    formed.push_back({{"proposal", f.proposal},
                      {"contributions", std::move(members)},
                      {"value", f.realized_value},
                      {"payoffs", std::move(payoffs)}});
  }
  json doc = {{"t", round.t},
              {"proposer", round.proposer.index},
              {"proposals", std::move(proposals)},
              {"decisions", std::move(decisions)},
              {"formed", std::move(formed)},
              {"utility", round.utility}};
  return doc.dump();
}

}  // namespace ocf

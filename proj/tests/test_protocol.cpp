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


#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "ocf/protocol.hpp"
#include "ocf/rng.hpp"
#include "support/scripted.hpp"

namespace ocf {
namespace {

using testing::scripted;
using testing::scripted_population;

Proposal proposal(int n, int proposer, int offer, std::initializer_list<std::pair<int, int>> demands) {
  std::vector<Contribution> d;
  for (const auto& [agent, q] : demands) d.push_back({AgentId{agent}, q});
  return make_proposal(n, AgentId{proposer}, offer, d);
}

RRGame pair_game(int n, int endowment, double value) {
  RelationalRule r;
  r.members = {AgentId{1}, AgentId{2}};
  r.value = value;
  return RRGame(std::vector<int>(static_cast<std::size_t>(n), endowment), {r});
}

TEST(SelectProposer, UniformOverAgents) {
  Rng rng(61);
  std::vector<int> counts(50, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[select_proposer(50, rng).slot()];
  double chi2 = 0.0;
  const double expected = draws / 50.0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 90.0);  // 49 degrees of freedom
}

TEST(SelectProposer, ReproducibleAndNeedsTwoAgents) {
  Rng a(62);
  Rng b(62);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(select_proposer(2, a), select_proposer(2, b));
  EXPECT_THROW(select_proposer(1, a), InvalidArgument);
}

TEST(Resolve, UnanimityRequired) {
  const std::vector<int> endowments = {10, 10, 10};
  std::vector<Proposal> props = {proposal(3, 1, 2, {{2, 3}, {3, 4}})};
  props[0].id = 0;
  const std::vector<Decision> split = {{0, AgentId{2}, true}, {0, AgentId{3}, false}};
  EXPECT_TRUE(resolve(props, split, endowments).empty());

  const std::vector<Decision> all = {{0, AgentId{2}, true}, {0, AgentId{3}, true}};
  const auto formed = resolve(props, all, endowments);
  ASSERT_EQ(formed.size(), 1u);
  EXPECT_EQ(formed[0].coalition, (Coalition{{1, 2}, {2, 3}, {3, 4}}));

  EXPECT_TRUE(resolve({}, {}, endowments).empty());
}

TEST(Resolve, EnforcesEndowmentsAndCompleteness) {
  const std::vector<int> endowments = {10, 5};
  std::vector<Proposal> props = {proposal(2, 1, 1, {{2, 3}}), proposal(2, 1, 1, {{2, 3}})};
  props[1].id = 1;
  const std::vector<Decision> greedy = {{0, AgentId{2}, true}, {1, AgentId{2}, true}};
  EXPECT_THROW(resolve(props, greedy, endowments), ProtocolViolation);
  const std::vector<Decision> missing = {{0, AgentId{2}, true}};
  EXPECT_THROW(resolve(props, missing, endowments), InvalidArgument);
  const std::vector<Decision> stranger = {{0, AgentId{1}, true}, {0, AgentId{2}, true},
                                          {1, AgentId{2}, false}};
  EXPECT_THROW(resolve(props, stranger, endowments), InvalidArgument);
}

TEST(AllocatePayoffs, ProportionalSplit) {
  const auto p = allocate_payoffs(12, Coalition{{1, 5}, {2, 8}});
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p[0].amount, 60.0 / 13.0, 1e-12);
  EXPECT_NEAR(p[1].amount, 96.0 / 13.0, 1e-12);
  for (const auto& x : allocate_payoffs(0, Coalition{{1, 5}, {2, 8}})) EXPECT_EQ(x.amount, 0.0);
  const auto eq = allocate_payoffs(-9, Coalition{{1, 4}, {2, 4}, {3, 4}});
  for (const auto& x : eq) EXPECT_DOUBLE_EQ(x.amount, -3.0);
  EXPECT_THROW(allocate_payoffs(1, Coalition{}), InvalidArgument);
}

TEST(AllocatePayoffs, ConservesValue) {
  Rng rng(63);
  for (int i = 0; i < 10000; ++i) {
    std::vector<Contribution> members;
    const int n = uniform_int(rng, 1, 50);
    for (int a = 1; a <= n; ++a) {
      if (bernoulli(rng, 0.4)) members.push_back({AgentId{a}, uniform_int(rng, 1, 525)});
    }
    if (members.empty()) members.push_back({AgentId{1}, 1});
    const Coalition c(std::move(members));
    const Utility u = uniform_int(rng, -100000, 100000);
    double total = 0.0;
    for (const auto& p : allocate_payoffs(u, c)) total += p.amount;
    EXPECT_NEAR(total, static_cast<double>(u), 1e-9);
  }
}

TEST(RunIteration, ObservationsArePrivate) {
  const RRGame game = pair_game(4, 10, 40);
  auto agents = scripted_population(game, 1);
  for (int a = 1; a <= 4; ++a) {
    scripted(agents, a).script(1, proposal(4, a, 5, {{a % 4 + 1, 5}}));
  }
  Streams streams = Streams::from_seed(7, 4);
  const auto round = run_iteration(1, game, agents, streams);
  const int p = round.proposer.index;
  const int partner = p % 4 + 1;
  ASSERT_EQ(round.formed.size(), 1u);
  for (int a = 1; a <= 4; ++a) {
    auto& s = scripted(agents, a);
    EXPECT_EQ(s.observe_calls, (std::vector<int>{1}));
    if (a == p || a == partner) {
      ASSERT_EQ(s.observed.size(), 1u);
      EXPECT_EQ(s.observed[0].coalition, round.formed[0].contributions);
      EXPECT_EQ(s.observed[0].value, round.formed[0].realized_value);
    } else {
      EXPECT_TRUE(s.observed.empty());
      EXPECT_TRUE(s.seen.empty());
    }
  }
}

TEST(RunIteration, OverlappingMembershipIsKept) {
  const RRGame game = pair_game(3, 10, 40);
  auto agents = scripted_population(game, 1);
  for (int a = 1; a <= 3; ++a) {
    const int b = a % 3 + 1;
    const int c = b % 3 + 1;
    scripted(agents, a).script(1, proposal(3, a, 2, {{b, 3}}));
    scripted(agents, a).script(1, proposal(3, a, 2, {{b, 1}, {c, 4}}));
  }
  Streams streams = Streams::from_seed(8, 3);
  const auto round = run_iteration(1, game, agents, streams);
  ASSERT_EQ(round.formed.size(), 2u);
  const int b = round.proposer.index % 3 + 1;
  EXPECT_EQ(scripted(agents, b).observed.size(), 2u);
  EXPECT_EQ(scripted(agents, b).seen.size(), 2u);
  EXPECT_EQ(round.memberships(), 5);
  EXPECT_EQ(round.invested(), 12);
}

TEST(RunIteration, AutoRejectsDemandsAboveEndowment) {
  const RRGame game({10, 4, 10}, {});
  auto agents = scripted_population(game, 1);
  for (int a = 1; a <= 3; ++a) {
    const int other = a == 2 ? 1 : 2;
    scripted(agents, a).script(1, proposal(3, a, 1, {{other, 5}}));
  }
  Streams streams = Streams::from_seed(9, 3);
  const auto round = run_iteration(1, game, agents, streams);
  if (round.proposer.index != 2) {
    ASSERT_EQ(round.decisions.size(), 1u);
    EXPECT_TRUE(round.decisions[0].auto_rejected);
    EXPECT_FALSE(round.decisions[0].accepted);
    EXPECT_TRUE(scripted(agents, 2).seen.empty());
    EXPECT_TRUE(round.formed.empty());
  } else {
    EXPECT_EQ(round.formed.size(), 1u);
  }
}

TEST(RunIteration, RejectsOverspendingStrategies) {
  const RRGame game({3, 3}, {});
  {
    auto agents = scripted_population(game, 1);
    for (int a = 1; a <= 2; ++a) {
      scripted(agents, a).script(1, proposal(2, a, 2, {{3 - a, 1}}));
      scripted(agents, a).script(1, proposal(2, a, 2, {{3 - a, 1}}));
    }
    Streams streams = Streams::from_seed(10, 2);
    EXPECT_THROW(run_iteration(1, game, agents, streams), ProtocolViolation);
  }
  {
    // The scripted responder accepts everything, even beyond its endowment.
    auto agents = scripted_population(game, 1);
    for (int a = 1; a <= 2; ++a) {
      scripted(agents, a).script(1, proposal(2, a, 1, {{3 - a, 2}}));
      scripted(agents, a).script(1, proposal(2, a, 1, {{3 - a, 2}}));
    }
    Streams streams = Streams::from_seed(11, 2);
    EXPECT_THROW(run_iteration(1, game, agents, streams), ProtocolViolation);
  }
}

TEST(RunIteration, EmptyRoundWhenNothingIsProposed) {
  const RRGame game({3, 3}, {});
  auto agents = scripted_population(game, 1);
  Streams streams = Streams::from_seed(12, 2);
  const auto round = run_iteration(1, game, agents, streams);
  EXPECT_TRUE(round.proposals.empty());
  EXPECT_TRUE(round.decisions.empty());
  EXPECT_TRUE(round.formed.empty());
  EXPECT_EQ(round.welfare(), 0);
  EXPECT_EQ(scripted(agents, 1).observe_calls.size(), 1u);
}

TEST(RunIteration, EndowmentsReplenishEachRound) {
  // Every round the proposer asks for the partner's whole endowment; this
  // only stays feasible if nothing carries over.
  const RRGame game = pair_game(2, 6, 12);
  auto agents = scripted_population(game, 5);
  for (int t = 1; t <= 5; ++t) {
    for (int a = 1; a <= 2; ++a) scripted(agents, a).script(t, proposal(2, a, 6, {{3 - a, 6}}));
  }
  Streams streams = Streams::from_seed(13, 2);
  const auto log = run_game(game, 5, agents, streams);
  ASSERT_EQ(log.rounds.size(), 5u);
  for (const auto& r : log.rounds) {
    ASSERT_EQ(r.formed.size(), 1u);
    EXPECT_EQ(r.formed[0].realized_value, 12);
  }
}

GameConfig random_config(const std::string& strategy, std::uint64_t seed) {
  GameGenParams p;
  p.n = 8;
  p.rule_count = 40;
  p.endowment_low = 40;
  p.endowment_high = 60;
  Rng rng(seed);
  GameConfig c{generate_random_game(p, rng), 25, {}, seed, {}};
  if (strategy == "overpro") {
    c.strategies = {{"overpro", {{"K", 4}}}};
  } else {
    c.strategies = {{strategy, {}}};
  }
  return c;
}

TEST(RunGame, ZeroIterationsGiveEmptyLog) {
  auto c = random_config("greedy", 14);
  c.iterations = 0;
  const auto log = run_game(c);
  EXPECT_TRUE(log.rounds.empty());
  EXPECT_EQ(log.totals.welfare, 0);
  EXPECT_EQ(log.totals.participation(), 0.0);
  EXPECT_EQ(log.totals.efficiency(), 0.0);
}

TEST(RunGame, DeterministicAndConserving) {
  for (const char* name : {"overpro", "greedy", "qlearning"}) {
    const auto c = random_config(name, 15);
    const auto a = run_game(c);
    const auto b = run_game(c);
    ASSERT_EQ(a.rounds.size(), 25u);
    ASSERT_EQ(b.rounds.size(), 25u);
    Utility sw = 0;
    for (std::size_t i = 0; i < a.rounds.size(); ++i) {
      EXPECT_EQ(round_to_json(a.rounds[i]), round_to_json(b.rounds[i]));
      const auto& r = a.rounds[i];
      const double paid = std::accumulate(r.utility.begin(), r.utility.end(), 0.0);
      EXPECT_NEAR(paid, static_cast<double>(r.welfare()), 1e-9);
      sw += r.welfare();
    }
    EXPECT_EQ(a.totals.welfare, sw);
    EXPECT_EQ(a.totals.welfare, b.totals.welfare);
  }
}

TEST(RunGame, ProposerOrderIndependentOfStrategies) {
  const auto g = run_game(random_config("greedy", 16));
  const auto q = run_game(random_config("qlearning", 16));
  const auto o = run_game(random_config("overpro", 16));
  for (std::size_t i = 0; i < g.rounds.size(); ++i) {
    EXPECT_EQ(g.rounds[i].proposer, q.rounds[i].proposer);
    EXPECT_EQ(g.rounds[i].proposer, o.rounds[i].proposer);
  }
}

TEST(RunGame, OnRoundSeesEveryRound) {
  auto c = random_config("greedy", 17);
  int calls = 0;
  RunOptions opts;
  opts.keep_rounds = false;
  opts.on_round = [&](const RoundRecord& r, std::span<const std::unique_ptr<Strategy>> s) {
    EXPECT_EQ(r.t, ++calls);
    EXPECT_EQ(s.size(), 8u);
  };
  const auto log = run_game(c, opts);
  EXPECT_EQ(calls, 25);
  EXPECT_TRUE(log.rounds.empty());
}

TEST(RoundJson, SparseDemandsAndFields) {
  const RRGame game = pair_game(2, 6, 12);
  auto agents = scripted_population(game, 1);
  for (int a = 1; a <= 2; ++a) scripted(agents, a).script(1, proposal(2, a, 6, {{3 - a, 6}}));
  Streams streams = Streams::from_seed(18, 2);
  const auto round = run_iteration(1, game, agents, streams);
  const auto text = round_to_json(round);
  const int other = 3 - round.proposer.index;
  EXPECT_NE(text.find("\"demands\":[[" + std::to_string(other) + ",6]]"), std::string::npos);
  EXPECT_NE(text.find("\"value\":12"), std::string::npos);
  EXPECT_EQ(text.find('\n'), std::string::npos);
}

}  // namespace
}  // namespace ocf

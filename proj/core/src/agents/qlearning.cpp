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

#include "ocf/agents/qlearning.hpp"

#include <algorithm>

#include "ocf/rng.hpp"

namespace ocf {

QState QState::zeros(int n) {
  if (n < 2) throw InvalidArgument("Q-learning needs n >= 2");
  return {std::vector<double>(static_cast<std::size_t>(n), 0.0),
          std::vector<double>(static_cast<std::size_t>(n - 1), 0.0)};
}

QState q_update(QState state, const Coalition& coalition, AgentId self, double value,
                double delta) {
  if (!coalition.contains(self)) throw InvalidArgument("q_update: agent not in coalition");
  for (const auto& m : coalition.members()) {
    if (m.agent == self) continue;
    double& q = state.q_agents.at(m.agent.slot());
    q += delta * (value - q);
  }
  const std::size_t h = coalition.size() - 1;
  if (h >= 1) {
    double& q = state.q_sizes.at(h - 1);
    q += delta * (value - q);
  }
  return state;
}

QLearningStrategy::QLearningStrategy(AgentSetup setup, QLearningParams params)
    : Strategy(std::move(setup)), state_(QState::zeros(setup_.n)) {
  setup_.schedules.delta_base = params.delta_base;
  setup_.schedules.validate();
}

std::vector<Proposal> QLearningStrategy::propose(int t, Rng& rng) {
  const auto split = split_budget(setup_.endowment, setup_.schedules.z(t));
  auto proposals = exploration_proposals(self(), setup_.n, split.exploration, rng);

  std::uniform_real_distribution<double> jitter(0.9, 1.1);
  std::vector<AgentId> pool;
  std::vector<double> pool_q;
  int remaining = split.exploitation;
  while (remaining >= 1) {
    const int offer = uniform_int(rng, 1, remaining);
    const int size = static_cast<int>(softmax_sample(state_.q_sizes, rng)) + 1;

    pool.clear();
    pool_q.clear();
    for (int a = 1; a <= setup_.n; ++a) {
      if (a == self().index) continue;
      pool.push_back(AgentId{a});
      pool_q.push_back(state_.q_agents[static_cast<std::size_t>(a - 1)]);
    }
    Proposal prop;
    prop.proposer = self();
    prop.offer = offer;
    prop.kind = ProposalKind::kExploitation;
    prop.demands.assign(static_cast<std::size_t>(setup_.n), 0);
    for (int s = 0; s < size; ++s) {
      const std::size_t pick = softmax_sample(pool_q, rng);
      prop.demands[pool[pick].slot()] = round_demand(offer * jitter(rng));
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
      pool_q.erase(pool_q.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    remaining -= offer;
    proposals.push_back(std::move(prop));
  }
  return proposals;
}

std::vector<bool> QLearningStrategy::respond(int t, std::span<const Proposal> incoming,
                                             Rng& rng) {
  const double c_t = setup_.schedules.c(t);
  std::vector<Assessment> assessments(incoming.size());
  for (std::size_t i = 0; i < incoming.size(); ++i) {
    double q_sum = 0.0;
    for (AgentId a : other_members(incoming[i], self())) q_sum += state_.q_agents[a.slot()];
    if (q_sum > 0.0) {
      const double share = static_cast<double>(incoming[i].demand_on(self())) /
                           static_cast<double>(incoming[i].total_requested());
      assessments[i] = {Verdict::kKnapsack, q_sum * share};
    }
  }
  return resolve_responses(incoming, self(), setup_.endowment, c_t, assessments, rng);
}

void QLearningStrategy::observe(int t, std::span<const Observation> joined) {
  const double delta = setup_.schedules.delta(t);
  for (const auto& obs : joined) {
    state_ = q_update(std::move(state_), obs.coalition, self(), static_cast<double>(obs.value),
                      delta);
  }
}

}  // namespace ocf

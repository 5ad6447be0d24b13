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

#include "ocf/agents/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ocf/rng.hpp"

namespace ocf {

Strategy::Strategy(AgentSetup setup) : setup_(std::move(setup)) {
  if (setup_.n < 2) throw InvalidArgument("a strategy needs n >= 2");
  if (setup_.self.index < 1 || setup_.self.index > setup_.n) {
    throw InvalidArgument("agent id outside 1..n");
  }
  if (setup_.endowment < 1) throw InvalidArgument("endowment must be >= 1");
  setup_.schedules.validate();
}

BudgetSplit split_budget(int endowment, double z) {
  const int explore = std::clamp(static_cast<int>(std::floor(endowment * z)), 0, endowment);
  return {explore, endowment - explore};
}

std::vector<Proposal> exploration_proposals(AgentId self, int n, int count, Rng& rng) {
  std::vector<Proposal> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  std::vector<int> pool;
  pool.reserve(static_cast<std::size_t>(n - 1));
  for (int a = 1; a <= n; ++a) {
    if (a != self.index) pool.push_back(a);
  }
  const int max_size = std::min(kMaxExplorationInvitees, n - 1);
  for (int p = 0; p < count; ++p) {
    Proposal prop;
    prop.proposer = self;
    prop.offer = 1;
    prop.kind = ProposalKind::kExploration;
    prop.demands.assign(static_cast<std::size_t>(n), 0);
    const int size = uniform_int(rng, 1, max_size);
    const int last = static_cast<int>(pool.size()) - 1;
    for (int s = 0; s < size; ++s) {
      const int pick = uniform_int(rng, s, last);
      std::swap(pool[static_cast<std::size_t>(s)], pool[static_cast<std::size_t>(pick)]);
      prop.demands[static_cast<std::size_t>(pool[static_cast<std::size_t>(s)] - 1)] = 1;
    }
    out.push_back(std::move(prop));
  }
  return out;
}

std::vector<AgentId> other_members(const Proposal& proposal, AgentId self) {
  std::vector<AgentId> others;
  if (proposal.proposer != self) others.push_back(proposal.proposer);
  for (std::size_t s = 0; s < proposal.demands.size(); ++s) {
    const auto agent = AgentId::from_slot(s);
    if (proposal.demands[s] > 0 && agent != self) others.push_back(agent);
  }
  std::sort(others.begin(), others.end());
  return others;
}

std::vector<bool> resolve_responses(std::span<const Proposal> incoming, AgentId self,
                                    int endowment, double c_t,
                                    std::span<const Assessment> assessments, Rng& rng) {
  if (assessments.size() != incoming.size()) {
    throw InvalidArgument("one assessment per incoming proposal is required");
  }
  std::vector<bool> accept(incoming.size(), false);
  std::vector<KnapsackItem> items;
  for (std::size_t i = 0; i < incoming.size(); ++i) {
    const int demand = incoming[i].demand_on(self);
    if (demand < 1 || demand > endowment) continue;
    if (assessments[i].verdict == Verdict::kKnapsack) {
      items.push_back({assessments[i].value, demand, i});
    }
  }

  int used = 0;
  for (std::size_t tag : knapsack_01(items, endowment)) {
    accept[tag] = true;
    used += incoming[tag].demand_on(self);
  }

  for (std::size_t i = 0; i < incoming.size(); ++i) {
    if (assessments[i].verdict != Verdict::kUndecided) continue;
    const int demand = incoming[i].demand_on(self);
    if (demand < 1 || demand > endowment - used) continue;
    if (demand == 1 || bernoulli(rng, c_t)) {
      accept[i] = true;
      used += demand;
    }
  }
  return accept;
}

}  // namespace ocf

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

#include "ocf/types.hpp"

#include <algorithm>
#include <string>

namespace ocf {

Coalition::Coalition(std::vector<Contribution> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(),
            [](const Contribution& a, const Contribution& b) { return a.agent < b.agent; });
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].amount < 1) {
      throw InvalidArgument("coalition contribution of agent " +
                            std::to_string(members_[i].agent.index) + " must be >= 1");
    }
    if (members_[i].agent.index < 1) {
      throw InvalidArgument("agent ids are 1-based");
    }
    if (i > 0 && members_[i - 1].agent == members_[i].agent) {
      throw InvalidArgument("duplicate coalition member " +
                            std::to_string(members_[i].agent.index));
    }
  }
}

Coalition::Coalition(std::initializer_list<std::pair<int, int>> members)
    : Coalition([&] {
        std::vector<Contribution> v;
        v.reserve(members.size());
        for (const auto& [agent, amount] : members) v.push_back({AgentId{agent}, amount});
        return v;
      }()) {}

int Coalition::contribution(AgentId agent) const {
  auto it = std::lower_bound(
      members_.begin(), members_.end(), agent,
      [](const Contribution& c, AgentId a) { return c.agent < a; });
  return (it != members_.end() && it->agent == agent) ? it->amount : 0;
}

std::int64_t Coalition::total() const {
  std::int64_t sum = 0;
  for (const auto& m : members_) sum += m.amount;
  return sum;
}

std::vector<AgentId> Proposal::demanded_agents() const {
  std::vector<AgentId> out;
  for (std::size_t s = 0; s < demands.size(); ++s) {
    if (demands[s] > 0) out.push_back(AgentId::from_slot(s));
  }
  return out;
}

std::int64_t Proposal::total_requested() const {
  std::int64_t sum = offer;
  for (int d : demands) sum += std::max(d, 0);
  return sum;
}

Coalition Proposal::as_coalition() const {
  std::vector<Contribution> members;
  members.push_back({proposer, offer});
  for (std::size_t s = 0; s < demands.size(); ++s) {
    if (demands[s] > 0) members.push_back({AgentId::from_slot(s), demands[s]});
  }
  return Coalition(std::move(members));
}

void Proposal::validate(int n) const {
  if (static_cast<int>(demands.size()) != n) {
    throw InvalidArgument("proposal demands vector must have n entries");
  }
  if (proposer.index < 1 || proposer.index > n) {
    throw InvalidArgument("proposal proposer out of range");
  }
  if (offer < 1) throw InvalidArgument("proposer offer must be >= 1");
  if (demands[proposer.slot()] != 0) {
    throw InvalidArgument("proposal must not demand from its own proposer");
  }
  bool any = false;
  for (int d : demands) {
    if (d < 0) throw InvalidArgument("proposal demands must be nonnegative");
    any = any || d > 0;
  }
  if (!any) throw InvalidArgument("proposal must demand from at least one agent");
}

Proposal make_proposal(int n, AgentId proposer, int offer,
                       std::span<const Contribution> demands, ProposalKind kind) {
  Proposal p;
  p.proposer = proposer;
  p.offer = offer;
  p.kind = kind;
  p.demands.assign(static_cast<std::size_t>(n), 0);
  for (const auto& d : demands) p.demands[d.agent.slot()] = d.amount;
  return p;
}

}  // namespace ocf

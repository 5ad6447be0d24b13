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

#include "ocf/agents/greedy.hpp"

#include <algorithm>
#include <cmath>

#include "ocf/rng.hpp"

namespace ocf {

GreedyState::GreedyState(std::size_t k) : k_(k) {
  if (k_ < 1) throw InvalidArgument("greedy top-k needs k >= 1");
}

void GreedyState::insert(const Coalition& coalition, double value, AgentId self) {
  auto same = std::find_if(records_.begin(), records_.end(),
                           [&](const GreedyRecord& r) { return r.coalition == coalition; });
  if (same != records_.end()) {
    same->value = value;
  } else {
    if (records_.size() == k_ && !(value > records_.back().value)) return;
    records_.push_back({coalition, value, std::max(1, coalition.contribution(self))});
  }
  std::stable_sort(records_.begin(), records_.end(),
                   [](const GreedyRecord& a, const GreedyRecord& b) { return a.value > b.value; });
  if (records_.size() > k_) records_.resize(k_);
}

GreedyStrategy::GreedyStrategy(AgentSetup setup, GreedyParams params)
    : Strategy(std::move(setup)), state_(static_cast<std::size_t>(params.k)) {}

std::vector<Proposal> GreedyStrategy::propose(int t, Rng& rng) {
  const auto split = split_budget(setup_.endowment, setup_.schedules.z(t));
  auto proposals = exploration_proposals(self(), setup_.n, split.exploration, rng);

  auto& records = state_.records();
  if (records.empty() || split.exploitation < 1) return proposals;

  std::vector<double> values;
  values.reserve(records.size());
  for (const auto& r : records) values.push_back(r.value);
  const auto probs = softmax(values);
  std::vector<double> weights(records.size());
  double total = 0.0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    weights[i] = records[i].last_offer * probs[i];
    total += weights[i];
  }

  std::uniform_real_distribution<double> jitter(0.9, 1.1);
  int remaining = split.exploitation;
  for (std::size_t i = 0; i < records.size() && remaining >= 1; ++i) {
    auto& record = records[i];
    if (record.coalition.size() < 2) continue;
    const double share = total > 0.0 ? weights[i] / total : 0.0;
    const int offer = std::min(
        remaining, std::max(1, static_cast<int>(std::floor(split.exploitation * share))));
    const double own = std::max(1, record.coalition.contribution(self()));
    Proposal prop;
    prop.proposer = self();
    prop.offer = offer;
    prop.kind = ProposalKind::kExploitation;
    prop.demands.assign(static_cast<std::size_t>(setup_.n), 0);
    for (const auto& m : record.coalition.members()) {
      if (m.agent == self()) continue;
      prop.demands[m.agent.slot()] = round_demand(offer * (m.amount / own) * jitter(rng));
    }
    record.last_offer = offer;
    remaining -= offer;
    proposals.push_back(std::move(prop));
  }
  return proposals;
}

std::vector<bool> GreedyStrategy::respond(int t, std::span<const Proposal> incoming, Rng& rng) {
  const double c_t = setup_.schedules.c(t);
  std::vector<Assessment> assessments(incoming.size());
  for (std::size_t i = 0; i < incoming.size(); ++i) {
    const auto others = other_members(incoming[i], self());
    const int needed = std::max(1, threshold_count(1.0 - c_t, others.size()));
    bool identified = false;
    double value_sum = 0.0;
    for (const auto& record : state_.records()) {
      int hits = 0;
      for (AgentId a : others) hits += record.coalition.contains(a) ? 1 : 0;
      if (hits >= needed) {
        identified = true;
        value_sum += record.value;
      }
    }
    if (identified && value_sum > 0.0) {
      const double share = static_cast<double>(incoming[i].demand_on(self())) /
                           static_cast<double>(incoming[i].total_requested());
      assessments[i] = {Verdict::kKnapsack, value_sum * share};
    }
  }
  return resolve_responses(incoming, self(), setup_.endowment, c_t, assessments, rng);
}

void GreedyStrategy::observe(int /*t*/, std::span<const Observation> joined) {
  for (const auto& obs : joined) {
    state_.insert(obs.coalition, static_cast<double>(obs.value), self());
  }
}

}  // namespace ocf

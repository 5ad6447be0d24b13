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

#ifndef OCF_AGENTS_GREEDY_HPP
#define OCF_AGENTS_GREEDY_HPP

#include <cstddef>
#include <vector>

#include "ocf/agents/strategy.hpp"

namespace ocf {

struct GreedyRecord {
  Coalition coalition;
  double value = 0.0;
  /// What this agent offered to the coalition the last time it proposed it
  /// (initially its observed contribution).
  int last_offer = 1;
};

/// The k most profitable observed coalitions, sorted by value descending.
class GreedyState {
 public:
  explicit GreedyState(std::size_t k);

  /// Inserts an observation made by `self`. An identical contribution
  /// vector is updated in place; otherwise the record only stays if it
  /// ranks among the k best (ties keep the older records).
  void insert(const Coalition& coalition, double value, AgentId self);

  std::size_t capacity() const { return k_; }
  const std::vector<GreedyRecord>& records() const { return records_; }
  std::vector<GreedyRecord>& records() { return records_; }

 private:
  std::size_t k_;
  std::vector<GreedyRecord> records_;
};

struct GreedyParams {
  int k = 15;
};

class GreedyStrategy final : public Strategy {
 public:
  GreedyStrategy(AgentSetup setup, GreedyParams params);

  std::string_view name() const override { return "greedy"; }
  std::vector<Proposal> propose(int t, Rng& rng) override;
  std::vector<bool> respond(int t, std::span<const Proposal> incoming, Rng& rng) override;
  void observe(int t, std::span<const Observation> joined) override;

  const GreedyState& state() const { return state_; }

 private:
  GreedyState state_;
};

}  // namespace ocf

#endif  // OCF_AGENTS_GREEDY_HPP

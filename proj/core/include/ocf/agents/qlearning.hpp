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

#ifndef OCF_AGENTS_QLEARNING_HPP
#define OCF_AGENTS_QLEARNING_HPP

#include <vector>

#include "ocf/agents/strategy.hpp"

namespace ocf {

/// Agent-level values Q_a (slot-indexed, own entry unused) and size-level
/// values Q_s for sizes h = 1..n-1 (index h-1).
struct QState {
  std::vector<double> q_agents;
  std::vector<double> q_sizes;

  static QState zeros(int n);
};

/// Q <- Q + delta (u_C - Q) for every other member of the coalition and for
/// the size entry h = |C| - 1. Throws if `self` is not a member.
QState q_update(QState state, const Coalition& coalition, AgentId self, double value,
                double delta);

struct QLearningParams {
  double delta_base = 0.95;
};

class QLearningStrategy final : public Strategy {
 public:
  QLearningStrategy(AgentSetup setup, QLearningParams params);

  std::string_view name() const override { return "qlearning"; }
  std::vector<Proposal> propose(int t, Rng& rng) override;
  std::vector<bool> respond(int t, std::span<const Proposal> incoming, Rng& rng) override;
  void observe(int t, std::span<const Observation> joined) override;

  const QState& state() const { return state_; }

 private:
  QState state_;
};

}  // namespace ocf

#endif  // OCF_AGENTS_QLEARNING_HPP

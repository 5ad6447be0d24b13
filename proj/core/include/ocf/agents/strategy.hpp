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

#ifndef OCF_AGENTS_STRATEGY_HPP
#define OCF_AGENTS_STRATEGY_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ocf/kernels.hpp"
#include "ocf/online_lda.hpp"
#include "ocf/types.hpp"

namespace ocf {

/// What an agent knows about itself and the game clock.
struct AgentSetup {
  AgentId self;
  int n = 2;
  int endowment = 1;
  Schedules schedules;
};

/// Decision-making strategy of one agent. An instance is driven by one
/// thread at a time; instances share no state.
class Strategy {
 public:
  explicit Strategy(AgentSetup setup);
  virtual ~Strategy() = default;

  Strategy(const Strategy&) = delete;
  Strategy& operator=(const Strategy&) = delete;

  const AgentSetup& setup() const { return setup_; }
  AgentId self() const { return setup_.self; }

  virtual std::string_view name() const = 0;

  /// Proposals for round t. Total offered never exceeds the endowment.
  virtual std::vector<Proposal> propose(int t, Rng& rng) = 0;

  /// One accept/reject per incoming proposal (all name this agent). The
  /// accepted demands never sum above the endowment.
  virtual std::vector<bool> respond(int t, std::span<const Proposal> incoming, Rng& rng) = 0;

  /// Coalitions formed in round t that this agent belongs to, with their
  /// realized values. May be empty.
  virtual void observe(int t, std::span<const Observation> joined) = 0;

  /// Learned topics, for strategies that keep a topic model.
  virtual const TopicMatrix* topic_matrix() const { return nullptr; }

 protected:
  AgentSetup setup_;
};

/// Maximum number of invited agents in a random exploration coalition.
inline constexpr int kMaxExplorationInvitees = 4;

struct BudgetSplit {
  int exploration = 0;   ///< floor(r * z_t) one-unit proposals
  int exploitation = 0;  ///< the rest of the endowment
};

BudgetSplit split_budget(int endowment, double z);

/// `count` random coalitions: invitee count uniform in
/// {1..min(4, n-1)}, invitees uniform without replacement, offer and every
/// demand equal to 1.
std::vector<Proposal> exploration_proposals(AgentId self, int n, int count, Rng& rng);

/// Members of the proposed coalition other than `self` (proposer included).
std::vector<AgentId> other_members(const Proposal& proposal, AgentId self);

/// Classification of one incoming proposal before the knapsack stage.
enum class Verdict { kReject, kKnapsack, kUndecided };

struct Assessment {
  Verdict verdict = Verdict::kUndecided;
  double value = 0.0;  ///< knapsack value when verdict == kKnapsack
};

/// Shared responder pipeline: infeasible demands and kReject are rejected;
/// kKnapsack items go through knapsack_01 with capacity = endowment (the
/// rest of them are rejected); kUndecided proposals are then visited in
/// order and accepted from leftover capacity if the demand is 1, otherwise
/// with probability c_t.
std::vector<bool> resolve_responses(std::span<const Proposal> incoming, AgentId self,
                                    int endowment, double c_t,
                                    std::span<const Assessment> assessments, Rng& rng);

}  // namespace ocf

#endif  // OCF_AGENTS_STRATEGY_HPP

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

#ifndef OCF_TYPES_HPP
#define OCF_TYPES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ocf {

/// Random engine used everywhere in the simulator. Every consumer receives
/// its own engine, derived from a master seed (see rng.hpp).
using Rng = std::mt19937_64;

/// Integral utility as earned by a formed coalition (after flooring).
using Utility = std::int64_t;

/// Thrown when a caller violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a strategy or the engine breaks a protocol invariant
/// (e.g. committing more resource than an agent holds).
class ProtocolViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 1-based agent identifier, as in N = {1, ..., n}.
struct AgentId {
  int index = 1;

  /// 0-based position for vector storage.
  constexpr std::size_t slot() const { return static_cast<std::size_t>(index - 1); }
  static constexpr AgentId from_slot(std::size_t slot) {
    return AgentId{static_cast<int>(slot) + 1};
  }

  friend constexpr auto operator<=>(AgentId, AgentId) = default;
};

struct Contribution {
  AgentId agent;
  int amount = 0;

  friend bool operator==(const Contribution&, const Contribution&) = default;
};

/// A coalition is a vector of positive integer resource contributions.
/// Membership is exactly the set of agents with a stored contribution;
/// members are kept sorted by agent id.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(std::vector<Contribution> members);
  Coalition(std::initializer_list<std::pair<int, int>> members);

  std::span<const Contribution> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  /// Contribution of `agent`, or 0 when the agent is not a member.
  int contribution(AgentId agent) const;
  bool contains(AgentId agent) const { return contribution(agent) > 0; }
  std::int64_t total() const;

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  std::vector<Contribution> members_;
};

/// A formed coalition as seen by one of its members.
struct Observation {
  Coalition coalition;
  Utility value = 0;
};

enum class ProposalKind { kExploration, kExploitation };

/// <demands_C, r_{i,C}> tuple issued by a proposer. `demands` has one entry
/// per agent (slot-indexed); 0 means the agent is not asked.
struct Proposal {
  std::size_t id = 0;
  AgentId proposer;
  int offer = 0;
  std::vector<int> demands;
  ProposalKind kind = ProposalKind::kExploration;

  int demand_on(AgentId agent) const { return demands[agent.slot()]; }
  std::vector<AgentId> demanded_agents() const;
  /// Proposer offer plus every positive demand.
  std::int64_t total_requested() const;
  /// The coalition that forms if every demanded agent accepts.
  Coalition as_coalition() const;
  /// Throws InvalidArgument when the tuple is malformed for `n` agents.
  void validate(int n) const;
};

/// Builds a proposal from explicit (agent, demand) pairs.
Proposal make_proposal(int n, AgentId proposer, int offer,
                       std::span<const Contribution> demands,
                       ProposalKind kind = ProposalKind::kExploitation);

}  // namespace ocf

#endif  // OCF_TYPES_HPP

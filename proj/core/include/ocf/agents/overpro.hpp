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

#ifndef OCF_AGENTS_OVERPRO_HPP
#define OCF_AGENTS_OVERPRO_HPP

#include <span>
#include <vector>

#include "ocf/agents/strategy.hpp"
#include "ocf/documents.hpp"
#include "ocf/online_lda.hpp"

namespace ocf {

struct OverproParams {
  LdaConfig lda;
  /// Significance threshold on |beta_gain - beta_loss|; <= 0 means 1/(n+2).
  double epsilon = 0.0;
  /// Divisor applied to |u_C| when writing utility words.
  int utility_scale = 1;
};

/// Topics k with |beta_{k,gain} - beta_{k,loss}| > epsilon.
std::vector<int> significant_topics(const TopicMatrix& beta, const Vocabulary& vocab,
                                    double epsilon);

struct TopicPartition {
  std::vector<int> good;  ///< significant, gain > loss
  std::vector<int> bad;   ///< significant, gain < loss
};

TopicPartition good_bad_topics(const TopicMatrix& beta, const Vocabulary& vocab, double epsilon);

/// Agents j != self whose word probability exceeds mean + population
/// standard deviation of all n agent-word probabilities (self included in
/// the statistics).
std::vector<AgentId> significant_agents(std::span<const double> agent_probs, AgentId self);

/// Learns the collaboration structure with a streaming topic model over
/// coalition documents and proposes/accepts coalitions from profitable
/// topics.
class OverproStrategy final : public Strategy {
 public:
  /// `rng` seeds lambda and, with random gamma init, the E-step engine.
  OverproStrategy(AgentSetup setup, OverproParams params, Rng& rng);

  std::string_view name() const override { return "overpro"; }
  std::vector<Proposal> propose(int t, Rng& rng) override;
  std::vector<bool> respond(int t, std::span<const Proposal> incoming, Rng& rng) override;
  void observe(int t, std::span<const Observation> joined) override;
  const TopicMatrix* topic_matrix() const override { return &beta_; }

  const LdaState& lda_state() const { return state_; }
  /// Replaces the topic model (e.g. a warm start) and recomputes the
  /// Good/Bad partition and significant agents.
  void restore_model(LdaState state);
  const TopicPartition& partition() const { return partition_; }
  /// SA_k for every topic (empty for topics outside Good and Bad).
  const std::vector<std::vector<AgentId>>& topic_agents() const { return topic_agents_; }
  double epsilon() const { return epsilon_; }

 private:
  void refresh_beliefs();
  double profitability(int topic) const;

  OverproParams params_;
  Vocabulary vocab_;
  double epsilon_;
  LdaState state_;
  Rng gamma_rng_;
  TopicMatrix beta_;
  TopicPartition partition_;
  std::vector<std::vector<AgentId>> topic_agents_;
};

}  // namespace ocf

#endif  // OCF_AGENTS_OVERPRO_HPP

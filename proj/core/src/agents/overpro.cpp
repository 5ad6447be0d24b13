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

#include "ocf/agents/overpro.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ocf {

std::vector<int> significant_topics(const TopicMatrix& beta, const Vocabulary& vocab,
                                    double epsilon) {
  std::vector<int> out;
  for (int k = 0; k < beta.topics(); ++k) {
    if (std::abs(beta(k, vocab.gain_word()) - beta(k, vocab.loss_word())) > epsilon) {
      out.push_back(k);
    }
  }
  return out;
}

TopicPartition good_bad_topics(const TopicMatrix& beta, const Vocabulary& vocab,
                               double epsilon) {
  TopicPartition out;
  for (int k : significant_topics(beta, vocab, epsilon)) {
    const double gain = beta(k, vocab.gain_word());
    const double loss = beta(k, vocab.loss_word());
    if (gain > loss) {
      out.good.push_back(k);
    } else if (gain < loss) {
      out.bad.push_back(k);
    }
  }
  return out;
}

std::vector<AgentId> significant_agents(std::span<const double> agent_probs, AgentId self) {
  std::vector<AgentId> out;
  if (agent_probs.empty()) return out;
  const double n = static_cast<double>(agent_probs.size());
  const double mean = std::accumulate(agent_probs.begin(), agent_probs.end(), 0.0) / n;
  double var = 0.0;
  for (double p : agent_probs) var += (p - mean) * (p - mean);
  const double cutoff = mean + std::sqrt(var / n);
  for (std::size_t s = 0; s < agent_probs.size(); ++s) {
    const auto agent = AgentId::from_slot(s);
    if (agent != self && agent_probs[s] > cutoff) out.push_back(agent);
  }
  return out;
}

OverproStrategy::OverproStrategy(AgentSetup setup, OverproParams params, Rng& rng)
    : Strategy(std::move(setup)),
      params_(std::move(params)),
      vocab_{setup_.n},
      epsilon_(params_.epsilon > 0.0 ? params_.epsilon : 1.0 / (setup_.n + 2)),
      state_(init_state(params_.lda, vocab_.size(), rng)),
      gamma_rng_(rng()) {
  if (params_.utility_scale < 1) throw InvalidArgument("utility_scale must be >= 1");
  refresh_beliefs();
}

void OverproStrategy::refresh_beliefs() {
  beta_ = topics(state_);
  partition_ = good_bad_topics(beta_, vocab_, epsilon_);
  topic_agents_.assign(static_cast<std::size_t>(beta_.topics()), {});
  std::vector<double> probs(static_cast<std::size_t>(setup_.n));
  auto fill = [&](int k) {
    for (int w = 0; w < setup_.n; ++w) probs[static_cast<std::size_t>(w)] = beta_(k, w);
    topic_agents_[static_cast<std::size_t>(k)] = significant_agents(probs, self());
  };
  for (int k : partition_.good) fill(k);
  for (int k : partition_.bad) fill(k);
}

void OverproStrategy::restore_model(LdaState state) {
  if (state.topics() != params_.lda.topics || state.vocab_size() != vocab_.size()) {
    throw InvalidArgument("restored topic model has the wrong shape");
  }
  if (!(state.lambda.array() > 0.0).all()) {
    throw InvalidArgument("restored topic model must be strictly positive");
  }
  state_ = std::move(state);
  refresh_beliefs();
}

double OverproStrategy::profitability(int topic) const {
  return beta_(topic, vocab_.gain_word()) - beta_(topic, vocab_.loss_word());
}

std::vector<Proposal> OverproStrategy::propose(int t, Rng& rng) {
  const auto split = split_budget(setup_.endowment, setup_.schedules.z(t));
  auto proposals = exploration_proposals(self(), setup_.n, split.exploration, rng);

  const int self_word = vocab_.agent_word(self());
  struct Scored {
    int topic;
    double score;
  };
  std::vector<Scored> scored;
  double total = 0.0;
  for (int k : partition_.good) {
    if (topic_agents_[static_cast<std::size_t>(k)].empty()) continue;
    const double score = beta_(k, self_word) * profitability(k);
    if (!(score > 0.0)) continue;
    scored.push_back({k, score});
    total += score;
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const Scored& a, const Scored& b) { return a.score > b.score; });

  int remaining = split.exploitation;
  for (const auto& [k, score] : scored) {
    if (remaining < 1) break;
    const int offer = std::min(
        remaining, std::max(1, static_cast<int>(std::floor(split.exploitation * score / total))));
    Proposal prop;
    prop.proposer = self();
    prop.offer = offer;
    prop.kind = ProposalKind::kExploitation;
    prop.demands.assign(static_cast<std::size_t>(setup_.n), 0);
    const double self_prob = beta_(k, self_word);
    for (AgentId j : topic_agents_[static_cast<std::size_t>(k)]) {
      prop.demands[j.slot()] = round_demand(offer * beta_(k, vocab_.agent_word(j)) / self_prob);
    }
    remaining -= offer;
    proposals.push_back(std::move(prop));
  }
  return proposals;
}

std::vector<bool> OverproStrategy::respond(int t, std::span<const Proposal> incoming, Rng& rng) {
  const double c_t = setup_.schedules.c(t);
  std::vector<Assessment> assessments(incoming.size());

  auto significant_count = [&](int k, const std::vector<AgentId>& others) {
    const auto& sa = topic_agents_[static_cast<std::size_t>(k)];
    int hits = 0;
    for (AgentId a : others) {
      if (std::binary_search(sa.begin(), sa.end(), a)) ++hits;
    }
    return hits;
  };

  for (std::size_t i = 0; i < incoming.size(); ++i) {
    const auto others = other_members(incoming[i], self());
    auto& verdict = assessments[i];

    const int reject_at = std::max(1, threshold_count(c_t, others.size()));
    for (int k : partition_.bad) {
      if (significant_count(k, others) >= reject_at) {
        verdict.verdict = Verdict::kReject;
        break;
      }
    }
    if (verdict.verdict == Verdict::kReject) continue;

    const int accept_at = std::max(1, threshold_count(1.0 - c_t, others.size()));
    double best = 0.0;
    for (int k : partition_.good) {
      if (significant_count(k, others) >= accept_at) best = std::max(best, profitability(k));
    }
    if (best > 0.0) {
      const double share = static_cast<double>(incoming[i].demand_on(self())) /
                           static_cast<double>(incoming[i].total_requested());
      verdict = {Verdict::kKnapsack, share * best};
    }
  }
  return resolve_responses(incoming, self(), setup_.endowment, c_t, assessments, rng);
}

void OverproStrategy::observe(int /*t*/, std::span<const Observation> joined) {
  if (joined.empty()) return;
  const auto batch = batch_for_agent(self(), joined, vocab_, params_.utility_scale);
  state_ = update(std::move(state_), params_.lda, batch, &gamma_rng_);
  refresh_beliefs();
}

}  // namespace ocf

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

#include "ocf/rr_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ocf/rng.hpp"

namespace ocf {

RRGame::RRGame(std::vector<int> endowments, std::vector<RelationalRule> rules,
               double noise_prob, double noise_sigma)
    : endowments_(std::move(endowments)),
      rules_(std::move(rules)),
      noise_prob_(noise_prob),
      noise_sigma_(noise_sigma) {
  if (endowments_.empty()) throw InvalidArgument("game needs at least one agent");
  for (int r : endowments_) {
    if (r < 1) throw InvalidArgument("endowments must be >= 1");
  }
  if (!(noise_prob_ >= 0.0 && noise_prob_ <= 1.0)) {
    throw InvalidArgument("noise_prob must lie in [0, 1]");
  }
  if (!(noise_sigma_ >= 0.0)) throw InvalidArgument("noise_sigma must be >= 0");

  anchored_.resize(endowments_.size());
  for (std::size_t idx = 0; idx < rules_.size(); ++idx) {
    auto& members = rules_[idx].members;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw InvalidArgument("rule members must be non-empty");
    if (members.front().index < 1 || members.back().index > n()) {
      throw InvalidArgument("rule member outside 1..n");
    }
    anchored_[members.front().slot()].push_back(idx);
  }
}

bool rule_applies(const RelationalRule& rule, const Coalition& coalition) {
  return std::all_of(rule.members.begin(), rule.members.end(),
                     [&](AgentId a) { return coalition.contains(a); });
}

double rule_value(const RelationalRule& rule, const Coalition& coalition,
                  std::span<const int> endowments) {
  if (rule.members.empty()) throw InvalidArgument("rule members must be non-empty");
  double pi_sum = 0.0;
  for (AgentId a : rule.members) {
    const int invested = coalition.contribution(a);
    if (invested == 0) throw InvalidArgument("rule does not apply to coalition");
    if (a.slot() >= endowments.size()) throw InvalidArgument("rule member has no endowment");
    const int endowment = endowments[a.slot()];
    if (invested > endowment) {
      throw InvalidArgument("contribution of agent " + std::to_string(a.index) +
                            " exceeds its endowment");
    }
    pi_sum += static_cast<double>(invested) / static_cast<double>(endowment);
  }
  return pi_sum / static_cast<double>(rule.members.size()) * rule.value;
}

double base_coalition_value(const RRGame& game, const Coalition& coalition) {
  for (const auto& m : coalition.members()) {
    if (m.agent.index > game.n()) throw InvalidArgument("coalition member outside 1..n");
    if (m.amount > game.endowment(m.agent)) {
      throw InvalidArgument("contribution of agent " + std::to_string(m.agent.index) +
                            " exceeds its endowment");
    }
  }
  const auto rules = game.rules();
  // Summed in rule order so the result does not depend on member order.
  std::vector<std::size_t> applicable;
  for (const auto& m : coalition.members()) {
    for (std::size_t idx : game.rules_anchored_at(m.agent)) {
      if (rule_applies(rules[idx], coalition)) applicable.push_back(idx);
    }
  }
  std::sort(applicable.begin(), applicable.end());
  double value = 0.0;
  for (std::size_t idx : applicable) value += rule_value(rules[idx], coalition, game.endowments());
  return value;
}

Utility realized_coalition_value(const RRGame& game, const Coalition& coalition, Rng& rng) {
  double value = base_coalition_value(game, coalition);
  if (bernoulli(rng, game.noise_prob())) {
    // N(0, 0) is the constant 0; std::normal_distribution requires sigma > 0.
    if (game.noise_sigma() > 0.0) {
      std::normal_distribution<double> factor(0.0, game.noise_sigma());
      value *= factor(rng);
    } else {
      value = 0.0;
    }
  }
  return static_cast<Utility>(std::floor(value));
}

void GameGenParams::validate() const {
  if (n < 2) throw InvalidArgument("n must be >= 2");
  if (rule_count < 1) throw InvalidArgument("rule_count must be >= 1");
  if (max_rule_size < 1 || max_rule_size > n) {
    throw InvalidArgument("max_rule_size must lie in [1, n]");
  }
  if (endowment_low < 1 || endowment_low > endowment_high) {
    throw InvalidArgument("endowment range must satisfy 1 <= low <= high");
  }
  if (!(value_sigma >= 0.0)) throw InvalidArgument("value_sigma must be >= 0");
  if (!(noise_prob >= 0.0 && noise_prob <= 1.0)) {
    throw InvalidArgument("noise_prob must lie in [0, 1]");
  }
  if (!(noise_sigma >= 0.0)) throw InvalidArgument("noise_sigma must be >= 0");
}

RRGame generate_random_game(const GameGenParams& params, Rng& rng) {
  params.validate();
  std::vector<int> endowments(static_cast<std::size_t>(params.n));
  for (int& r : endowments) r = uniform_int(rng, params.endowment_low, params.endowment_high);

  std::normal_distribution<double> value_dist(params.value_mean, params.value_sigma);
  std::vector<int> pool(static_cast<std::size_t>(params.n));
  std::vector<RelationalRule> rules;
  rules.reserve(static_cast<std::size_t>(params.rule_count));
  for (int k = 0; k < params.rule_count; ++k) {
    const int size = uniform_int(rng, 1, params.max_rule_size);
    std::iota(pool.begin(), pool.end(), 1);
    RelationalRule rule;
    for (int s = 0; s < size; ++s) {
      const int pick = uniform_int(rng, s, params.n - 1);
      std::swap(pool[static_cast<std::size_t>(s)], pool[static_cast<std::size_t>(pick)]);
      rule.members.push_back(AgentId{pool[static_cast<std::size_t>(s)]});
    }
    rule.value = params.value_sigma > 0.0 ? value_dist(rng) : params.value_mean;
    rules.push_back(std::move(rule));
  }
  return RRGame(std::move(endowments), std::move(rules), params.noise_prob,
                params.noise_sigma);
}

}  // namespace ocf

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

#ifndef OCF_RR_ENGINE_HPP
#define OCF_RR_ENGINE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocf/types.hpp"

namespace ocf {

/// A -> (sum_{i in A} pi_{i,C} / |A|) * value. Members are stored sorted and
/// unique.
struct RelationalRule {
  std::vector<AgentId> members;
  double value = 0.0;

  friend bool operator==(const RelationalRule&, const RelationalRule&) = default;
};

/// The hidden collaboration structure: endowments r_i, the rule set, and the
/// multiplicative noise applied to coalition values.
class RRGame {
 public:
  RRGame(std::vector<int> endowments, std::vector<RelationalRule> rules,
         double noise_prob = 0.0, double noise_sigma = 0.0);

  int n() const { return static_cast<int>(endowments_.size()); }
  int endowment(AgentId agent) const { return endowments_[agent.slot()]; }
  std::span<const int> endowments() const { return endowments_; }
  std::span<const RelationalRule> rules() const { return rules_; }
  double noise_prob() const { return noise_prob_; }
  double noise_sigma() const { return noise_sigma_; }

  /// Indices of the rules whose smallest member is `agent`. Every rule is
  /// listed under exactly one agent.
  std::span<const std::size_t> rules_anchored_at(AgentId agent) const {
    return anchored_[agent.slot()];
  }

 private:
  std::vector<int> endowments_;
  std::vector<RelationalRule> rules_;
  double noise_prob_;
  double noise_sigma_;
  std::vector<std::vector<std::size_t>> anchored_;
};

bool rule_applies(const RelationalRule& rule, const Coalition& coalition);

/// Throws InvalidArgument if the rule does not apply, or a member lacks an
/// endowment, or a contribution exceeds its endowment.
double rule_value(const RelationalRule& rule, const Coalition& coalition,
                  std::span<const int> endowments);

/// Sum of rule_value over every applicable rule (0 when none applies).
double base_coalition_value(const RRGame& game, const Coalition& coalition);

/// Base value, multiplied with probability noise_prob by a N(0, sigma^2)
/// draw, then floored.
Utility realized_coalition_value(const RRGame& game, const Coalition& coalition, Rng& rng);

struct GameGenParams {
  int n = 50;
  int rule_count = 500;
  double value_mean = 0.0;
  double value_sigma = 100.0;
  int endowment_low = 475;
  int endowment_high = 525;
  int max_rule_size = 4;
  double noise_prob = 0.05;
  double noise_sigma = 5.0;

  void validate() const;
};

RRGame generate_random_game(const GameGenParams& params, Rng& rng);

/// JSON document with n, endowments, noise parameters and one record per
/// rule. Doubles are written with round-trip precision.
std::string serialize_game(const RRGame& game);
RRGame parse_game(std::string_view text);

}  // namespace ocf

#endif  // OCF_RR_ENGINE_HPP

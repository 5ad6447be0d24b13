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

#ifndef OCF_AGENTS_FACTORY_HPP
#define OCF_AGENTS_FACTORY_HPP

#include <map>
#include <memory>
#include <string>

#include "ocf/agents/greedy.hpp"
#include "ocf/agents/overpro.hpp"
#include "ocf/agents/qlearning.hpp"
#include "ocf/agents/strategy.hpp"

namespace ocf {

/// A strategy name ("overpro", "greedy", "qlearning") plus numeric
/// parameters.
///
///   overpro:   K, tau0, kappa, alpha, eta, D, gamma_tol, max_e_iters,
///              epsilon, utility_scale, random_gamma (0/1)
///   greedy:    k
///   qlearning: delta_base
///
/// Omitted parameters take their defaults; alpha and eta default to 1/K and
/// D to (mean endowment x iterations).
struct StrategySpec {
  std::string name;
  std::map<std::string, double> params;

  /// "K=15;kappa=0.9;tau0=200" style summary (keys in sorted order).
  std::string label() const;
  void validate() const;
};

/// Builds the strategy for one agent. `rng` is the agent's own stream; it is
/// used for model initialisation only.
std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec, const AgentSetup& setup,
                                        Rng& rng, double mean_endowment);

OverproParams overpro_params(const StrategySpec& spec, int iterations, double mean_endowment);

}  // namespace ocf

#endif  // OCF_AGENTS_FACTORY_HPP

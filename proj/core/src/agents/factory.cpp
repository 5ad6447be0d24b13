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

#include "ocf/agents/factory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string_view>

namespace ocf {
namespace {

constexpr std::array<std::string_view, 11> kOverproKeys = {
    "K", "tau0", "kappa", "alpha", "eta", "D", "gamma_tol", "max_e_iters",
    "epsilon", "utility_scale", "random_gamma"};
constexpr std::array<std::string_view, 1> kGreedyKeys = {"k"};
constexpr std::array<std::string_view, 1> kQKeys = {"delta_base"};

template <std::size_t N>
void check_keys(const StrategySpec& spec, const std::array<std::string_view, N>& allowed) {
  for (const auto& [key, value] : spec.params) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw InvalidArgument("unknown parameter '" + key + "' for strategy " + spec.name);
    }
    if (!std::isfinite(value)) throw InvalidArgument("parameter '" + key + "' is not finite");
  }
}

double get(const StrategySpec& spec, const std::string& key, double fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

int get_int(const StrategySpec& spec, const std::string& key, int fallback) {
  const double v = get(spec, key, fallback);
  if (v != std::floor(v)) throw InvalidArgument("parameter '" + key + "' must be an integer");
  return static_cast<int>(v);
}

}  // namespace

std::string StrategySpec::label() const {
  std::string out;
  char buf[64];
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    std::snprintf(buf, sizeof buf, "%g", value);
    out += key + "=" + buf;
  }
  return out;
}

void StrategySpec::validate() const {
  if (name == "overpro") {
    check_keys(*this, kOverproKeys);
  } else if (name == "greedy") {
    check_keys(*this, kGreedyKeys);
    if (get_int(*this, "k", 15) < 1) throw InvalidArgument("greedy k must be >= 1");
  } else if (name == "qlearning") {
    check_keys(*this, kQKeys);
  } else {
    throw InvalidArgument("unknown strategy '" + name + "'");
  }
}

OverproParams overpro_params(const StrategySpec& spec, int iterations, double mean_endowment) {
  OverproParams params;
  const int topics = get_int(spec, "K", 15);
  params.lda = LdaConfig::for_topics(topics);
  params.lda.alpha = get(spec, "alpha", 1.0 / topics);
  params.lda.eta = get(spec, "eta", 1.0 / topics);
  params.lda.tau0 = get(spec, "tau0", params.lda.tau0);
  params.lda.kappa = get(spec, "kappa", params.lda.kappa);
  const double d_default = std::max(1.0, std::round(mean_endowment * iterations));
  params.lda.d_estimate = static_cast<std::int64_t>(get(spec, "D", d_default));
  params.lda.gamma_tol = get(spec, "gamma_tol", params.lda.gamma_tol);
  params.lda.max_e_iters = get_int(spec, "max_e_iters", params.lda.max_e_iters);
  params.lda.gamma_init =
      get(spec, "random_gamma", 0.0) != 0.0 ? GammaInit::kRandom : GammaInit::kOnes;
  params.epsilon = get(spec, "epsilon", 0.0);
  params.utility_scale = get_int(spec, "utility_scale", 1);
  params.lda.validate();
  return params;
}

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec, const AgentSetup& setup,
                                        Rng& rng, double mean_endowment) {
  spec.validate();
  if (spec.name == "overpro") {
    return std::make_unique<OverproStrategy>(
        setup, overpro_params(spec, setup.schedules.iterations, mean_endowment), rng);
  }
  if (spec.name == "greedy") {
    return std::make_unique<GreedyStrategy>(setup, GreedyParams{get_int(spec, "k", 15)});
  }
  return std::make_unique<QLearningStrategy>(
      setup, QLearningParams{get(spec, "delta_base", 0.95)});
}

}  // namespace ocf

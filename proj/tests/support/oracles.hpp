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


// Independent reference implementations used as test oracles. They favour
// plain loops over speed and share no code with the library internals.

#ifndef OCF_TESTS_ORACLES_HPP
#define OCF_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include <boost/math/special_functions/digamma.hpp>

#include "ocf/kernels.hpp"
#include "ocf/rr_engine.hpp"

namespace ocf::oracle {

struct KnapsackOptimum {
  double value = 0.0;
  int weight = 0;
};

// Exhaustive search over all 2^m subsets; best value, then smallest weight.
inline KnapsackOptimum brute_force_knapsack(const std::vector<KnapsackItem>& items, int capacity) {
  KnapsackOptimum best;
  const std::uint32_t subsets = 1u << items.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    double value = 0.0;
    int weight = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask & (1u << i)) {
        value += items[i].value;
        weight += items[i].weight;
      }
    }
    if (weight > capacity) continue;
    if (value > best.value + 1e-9 || (std::abs(value - best.value) <= 1e-9 && weight < best.weight)) {
      best = {value, weight};
    }
  }
  return best;
}

// Evaluates every rule directly from its definition.
inline double per_rule_value(const RRGame& game, const Coalition& coalition) {
  double total = 0.0;
  for (const auto& rule : game.rules()) {
    bool applies = true;
    for (AgentId a : rule.members) applies = applies && coalition.contribution(a) > 0;
    if (!applies) continue;
    double pi_sum = 0.0;
    for (AgentId a : rule.members) {
      pi_sum += static_cast<double>(coalition.contribution(a)) / game.endowment(a);
    }
    total += pi_sum / static_cast<double>(rule.members.size()) * rule.value;
  }
  return total;
}

// Plain MC-nets value of a member set: sum of the values of rules whose
// pattern is contained in it.
inline double mc_net_value(const RRGame& game, const std::set<int>& members) {
  double total = 0.0;
  for (const auto& rule : game.rules()) {
    bool applies = true;
    for (AgentId a : rule.members) applies = applies && members.count(a.index) > 0;
    if (applies) total += rule.value;
  }
  return total;
}

struct StraightLineConfig {
  double alpha = 0.1;
  double eta = 0.1;
  double tau0 = 200.0;
  double kappa = 0.9;
  double d = 1000.0;
  double tol = 1e-3;
  int max_iters = 100;
};

using Dense = std::vector<std::vector<double>>;

struct StraightLineStep {
  Dense lambda;
  std::vector<double> gamma;
  int iterations = 0;
};

// One iteration of the streaming algorithm on a single document given as a
// dense count vector, written out term by term.
inline StraightLineStep straight_line_step(const Dense& lambda, std::int64_t t,
                                           const std::vector<int>& counts,
                                           const StraightLineConfig& cfg) {
  using boost::math::digamma;
  const std::size_t K = lambda.size();
  const std::size_t V = counts.size();

  Dense elog_beta(K, std::vector<double>(V));
  for (std::size_t k = 0; k < K; ++k) {
    double row = 0.0;
    for (std::size_t w = 0; w < V; ++w) row += lambda[k][w];
    for (std::size_t w = 0; w < V; ++w) elog_beta[k][w] = digamma(lambda[k][w]) - digamma(row);
  }

  std::vector<double> gamma(K, 1.0);
  Dense phi(V, std::vector<double>(K, 0.0));
  int iterations = 0;
  for (int it = 0; it < cfg.max_iters; ++it) {
    double gamma_sum = 0.0;
    for (double g : gamma) gamma_sum += g;
    std::vector<double> next(K, cfg.alpha);
    for (std::size_t w = 0; w < V; ++w) {
      if (counts[w] == 0) continue;
      double norm = 0.0;
      for (std::size_t k = 0; k < K; ++k) {
        phi[w][k] = std::exp(digamma(gamma[k]) - digamma(gamma_sum) + elog_beta[k][w]);
        norm += phi[w][k];
      }
      for (std::size_t k = 0; k < K; ++k) {
        phi[w][k] /= norm;
        next[k] += counts[w] * phi[w][k];
      }
    }
    double change = 0.0;
    for (std::size_t k = 0; k < K; ++k) change += std::abs(next[k] - gamma[k]);
    gamma = next;
    iterations = it + 1;
    if (change / static_cast<double>(K) < cfg.tol) break;
  }

  const double rho = std::pow(cfg.tau0 + static_cast<double>(t), -cfg.kappa);
  StraightLineStep out{lambda, gamma, iterations};
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t w = 0; w < V; ++w) {
      const double target = cfg.eta + cfg.d * counts[w] * phi[w][k];
      out.lambda[k][w] = (1.0 - rho) * lambda[k][w] + rho * target;
    }
  }
  return out;
}

}  // namespace ocf::oracle

#endif  // OCF_TESTS_ORACLES_HPP

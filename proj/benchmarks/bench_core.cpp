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


#include <vector>

#include <benchmark/benchmark.h>

#include "ocf/agents/factory.hpp"
#include "ocf/documents.hpp"
#include "ocf/kernels.hpp"
#include "ocf/online_lda.hpp"
#include "ocf/protocol.hpp"
#include "ocf/rng.hpp"
#include "ocf/rr_engine.hpp"

namespace {

using namespace ocf;

void BM_Knapsack(benchmark::State& state) {
  Rng rng(1);
  const int m = static_cast<int>(state.range(0));
  std::vector<KnapsackItem> items;
  for (int i = 0; i < m; ++i) {
    items.push_back({uniform01(rng) * 100.0, uniform_int(rng, 1, 60), static_cast<std::size_t>(i)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(knapsack_01(items, 500));
  state.SetComplexityN(m);
}
BENCHMARK(BM_Knapsack)->RangeMultiplier(4)->Range(4, 256)->Complexity();

GameGenParams table_params() {
  GameGenParams p;
  p.n = 50;
  p.rule_count = 500;
  return p;
}

void BM_CoalitionValue(benchmark::State& state) {
  Rng rng(2);
  const auto game = generate_random_game(table_params(), rng);
  std::vector<Coalition> coalitions;
  for (int i = 0; i < 256; ++i) {
    std::vector<Contribution> members;
    for (int a = 1; a <= game.n(); ++a) {
      if (bernoulli(rng, 0.2)) members.push_back({AgentId{a}, uniform_int(rng, 1, 100)});
    }
    if (members.empty()) members.push_back({AgentId{1}, 1});
    coalitions.emplace_back(std::move(members));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(realized_coalition_value(game, coalitions[i++ % coalitions.size()], rng));
  }
}
BENCHMARK(BM_CoalitionValue);

void BM_LdaUpdate(benchmark::State& state) {
  Rng rng(3);
  auto config = LdaConfig::for_topics(15);
  config.d_estimate = 100000;
  const Vocabulary vocab{50};
  auto lda = init_state(config, vocab.size(), rng);
  std::vector<CoalitionDocument> batch;
  for (int d = 0; d < static_cast<int>(state.range(0)); ++d) {
    Coalition c({{1 + d % 50, 300}, {1 + (d + 17) % 50, 250}, {1 + (d + 34) % 50, 480}});
    batch.push_back(encode(c, 120 - 40 * d, vocab));
  }
  for (auto _ : state) lda = update(std::move(lda), config, batch);
}
BENCHMARK(BM_LdaUpdate)->Arg(1)->Arg(4)->Arg(16);

void BM_RunIteration(benchmark::State& state) {
  const char* names[] = {"overpro", "greedy", "qlearning"};
  Rng rng(4);
  GameConfig config{generate_random_game(table_params(), rng), 1000,
                    {StrategySpec{names[state.range(0)], {}}}, 5, Schedules{}};
  Streams streams = Streams::from_seed(config.seed, config.game.n());
  config.schedules.iterations = config.iterations;
  const auto strategies = build_strategies(config, streams);
  int t = 0;
  for (auto _ : state) {
    t = t % config.iterations + 1;
    benchmark::DoNotOptimize(run_iteration(t, config.game, strategies, streams));
  }
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_RunIteration)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();

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

#include "ocf/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ocf/rng.hpp"

namespace ocf {
namespace {

// (value, weight) ordered by value descending, then weight ascending.
struct Score {
  double value = 0.0;
  long weight = 0;
};

bool better(const Score& a, const Score& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.weight < b.weight;
}

}  // namespace

std::vector<std::size_t> knapsack_01(std::span<const KnapsackItem> items, int capacity) {
  if (capacity <= 0 || items.empty()) return {};
  for (const auto& item : items) {
    if (item.weight < 1) throw InvalidArgument("knapsack item weight must be >= 1");
  }
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return items[a].tag < items[b].tag; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (items[order[i - 1]].tag == items[order[i]].tag) {
      throw InvalidArgument("knapsack item tags must be unique");
    }
  }

  // best[i][c]: optimal score over items order[i..] within capacity c.
  const std::size_t count = items.size();
  const auto width = static_cast<std::size_t>(capacity) + 1;
  std::vector<Score> best((count + 1) * width);
  auto at = [&](std::size_t i, int c) -> Score& {
    return best[i * width + static_cast<std::size_t>(c)];
  };
  for (std::size_t i = count; i-- > 0;) {
    const auto& item = items[order[i]];
    for (int c = 0; c <= capacity; ++c) {
      Score skip = at(i + 1, c);
      if (item.weight <= c) {
        const Score& rest = at(i + 1, c - item.weight);
        Score take{rest.value + item.value, rest.weight + item.weight};
        at(i, c) = better(take, skip) ? take : skip;
      } else {
        at(i, c) = skip;
      }
    }
  }

  // Walk forward in tag order, taking an item whenever taking it is still
  // optimal: this yields the lexicographically smallest optimal tag set.
  std::vector<std::size_t> chosen;
  int c = capacity;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& item = items[order[i]];
    if (item.weight > c) continue;
    const Score& target = at(i, c);
    const Score& rest = at(i + 1, c - item.weight);
    const Score take{rest.value + item.value, rest.weight + item.weight};
    if (take.value == target.value && take.weight == target.weight) {
      chosen.push_back(item.tag);
      c -= item.weight;
    }
  }
  return chosen;
}

std::vector<double> softmax(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("softmax of an empty list");
  const double top = *std::max_element(values.begin(), values.end());
  std::vector<double> probs(values.size());
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    probs[i] = std::exp(values[i] - top);
    total += probs[i];
  }
  for (double& p : probs) p /= total;
  return probs;
}

std::size_t softmax_sample(std::span<const double> values, Rng& rng) {
  const auto probs = softmax(values);
  if (probs.size() == 1) return 0;
  double u = uniform01(rng);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (u < probs[i]) return i;
    u -= probs[i];
  }
  // Rounding left a sliver of mass; fall back to the last positive entry.
  for (std::size_t i = probs.size(); i-- > 0;) {
    if (probs[i] > 0.0) return i;
  }
  return probs.size() - 1;
}

int round_demand(double quantity) {
  const double rounded = std::floor(quantity + 0.5);
  if (!(rounded >= 1.0)) return 1;
  if (rounded > static_cast<double>(std::numeric_limits<int>::max())) {
    return std::numeric_limits<int>::max();
  }
  return static_cast<int>(rounded);
}

int threshold_count(double fraction, std::size_t count) {
  return static_cast<int>(std::ceil(fraction * static_cast<double>(count) - 1e-9));
}

double Schedules::progress(int t) const {
  if (t < 1 || t > iterations) throw InvalidArgument("schedule index t outside [1, I]");
  if (iterations == 1) return 0.0;
  return static_cast<double>(t - 1) / static_cast<double>(iterations - 1);
}

double Schedules::z(int t) const {
  const double rest = 1.0 - progress(t);
  const double w = rest * rest;
  return z_start * w + z_end * (1.0 - w);
}

double Schedules::c(int t) const {
  const double s = progress(t);
  return c_start * (1.0 - s) + c_end * s;
}

double Schedules::delta(int t) const {
  if (t < 1 || t > iterations) throw InvalidArgument("schedule index t outside [1, I]");
  return std::pow(delta_base, t);
}

void Schedules::validate() const {
  if (iterations < 1) throw InvalidArgument("schedules need at least one iteration");
  if (!(z_end > 0.0 && z_end <= z_start && z_start <= 1.0)) {
    throw InvalidArgument("z schedule must satisfy 0 < z_end <= z_start <= 1");
  }
  if (!(c_end > 0.0 && c_end <= c_start && c_start <= 1.0)) {
    throw InvalidArgument("c schedule must satisfy 0 < c_end <= c_start <= 1");
  }
  if (!(delta_base > 0.0 && delta_base < 1.0)) {
    throw InvalidArgument("delta base must lie in (0, 1)");
  }
}

}  // namespace ocf

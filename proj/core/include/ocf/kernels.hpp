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

#ifndef OCF_KERNELS_HPP
#define OCF_KERNELS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ocf/types.hpp"

namespace ocf {

struct KnapsackItem {
  double value = 0.0;
  int weight = 1;
  std::size_t tag = 0;
};

/// Exact 0/1 knapsack by dynamic programming over integer weights. Returns the
/// tags of an optimal subset, sorted ascending. Among optimal subsets the one
/// with the smaller total weight wins, then the lexicographically smallest
/// tag sequence. Tags must be unique.
std::vector<std::size_t> knapsack_01(std::span<const KnapsackItem> items, int capacity);

/// exp(v_i - max v) / sum_j exp(v_j - max v).
std::vector<double> softmax(std::span<const double> values);

/// Draws an index with softmax probabilities (temperature 1).
std::size_t softmax_sample(std::span<const double> values, Rng& rng);

/// round-half-up, clamped to >= 1.
int round_demand(double quantity);

/// ceil(fraction * count) with a small guard against 0.5 * 4 = 2.0000000001.
int threshold_count(double fraction, std::size_t count);

/// Per-iteration schedules over t in [1, iterations]:
///   z_t = z_end + (z_start - z_end) (1 - s)^2
///   c_t = c_start - (c_start - c_end) s
///   delta_t = delta_base^t
/// with s = (t - 1) / (iterations - 1) (s = 0 when iterations == 1).
struct Schedules {
  int iterations = 1000;
  double z_start = 1.0;
  double z_end = 1e-3;
  double c_start = 1.0;
  double c_end = 0.5;
  double delta_base = 0.95;

  double z(int t) const;
  double c(int t) const;
  double delta(int t) const;
  void validate() const;

 private:
  double progress(int t) const;
};

}  // namespace ocf

#endif  // OCF_KERNELS_HPP

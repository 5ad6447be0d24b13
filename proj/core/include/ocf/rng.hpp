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

#ifndef OCF_RNG_HPP
#define OCF_RNG_HPP

#include <cstdint>

#include "ocf/types.hpp"

namespace ocf {

/// Reserved stream ids. Agent streams use the agent's 1-based index.
inline constexpr std::uint64_t kEngineStream = 0;
inline constexpr std::uint64_t kGameStream = 0xffff'ffff'0000'0001ULL;
inline constexpr std::uint64_t kValuationStream = 0xffff'ffff'0000'0002ULL;

/// Counter-based seed splitting: independent, reproducible 64-bit seeds for
/// named streams of one master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

inline Rng make_stream(std::uint64_t master, std::uint64_t stream) {
  return Rng(derive_seed(master, stream));
}

/// Uniform real in [0, 1).
double uniform01(Rng& rng);

bool bernoulli(Rng& rng, double p);

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

}  // namespace ocf

#endif  // OCF_RNG_HPP

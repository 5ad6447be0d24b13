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

#ifndef OCF_DIGAMMA_HPP
#define OCF_DIGAMMA_HPP

namespace ocf {

/// Psi(x) = d/dx log Gamma(x). Poles at non-positive integers return NaN.
double digamma(double x);

}  // namespace ocf

#endif  // OCF_DIGAMMA_HPP

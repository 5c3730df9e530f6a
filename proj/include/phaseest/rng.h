// Copyright 2026 The phaseest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHASEEST_RNG_H
#define PHASEEST_RNG_H

#include <cstdint>
#include <random>

namespace phaseest {

using Rng = std::mt19937_64;

/// Builds the generator for one trial. The stream depends only on
/// (seed, stream, index), so a campaign gives the same per-trial draws no
/// matter how trials are scheduled across threads.
Rng trial_rng(uint64_t seed, uint64_t stream, uint64_t index);

/// Uniform double in [0, 1) using the top 53 bits of one draw.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform phase in [0, 2pi).
double uniform_phase(Rng &rng);

}  // namespace phaseest

#endif

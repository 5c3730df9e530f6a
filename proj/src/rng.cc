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

#include "phaseest/rng.h"

#include "phaseest/circular.h"

namespace phaseest {

namespace {

// SplitMix64 finalizer; spreads nearby (seed, stream, index) triples apart.
uint64_t mix(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

Rng trial_rng(uint64_t seed, uint64_t stream, uint64_t index) {
    return Rng(mix(mix(mix(seed) ^ stream) ^ index));
}

double uniform_phase(Rng &rng) {
    return wrap_phase(kTwoPi * uniform01(rng));
}

}  // namespace phaseest

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

#ifndef PHASEEST_CIRCULAR_H
#define PHASEEST_CIRCULAR_H

#include <cmath>
#include <numbers>

namespace phaseest {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle into [0, 2pi).
inline double wrap_phase(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative number can round up to exactly 2pi.
    if (r >= kTwoPi) {
        r = 0;
    }
    return r;
}

/// Shortest angular separation between two phases, in [0, pi].
inline double circular_distance(double a, double b) {
    return std::abs(wrap_phase(a - b + kPi) - kPi);
}

}  // namespace phaseest

#endif

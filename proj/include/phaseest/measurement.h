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

#ifndef PHASEEST_MEASUREMENT_H
#define PHASEEST_MEASUREMENT_H

#include <cstdint>

#include "phaseest/rng.h"

namespace phaseest {

/// Binary detection result. Plus is u=0, Minus is u=1.
enum class Outcome : uint8_t { Plus = 0, Minus = 1 };

inline int outcome_bit(Outcome u) {
    return static_cast<int>(u);
}

/// One probe configuration: the phase shift is applied `passes` times and
/// the reference arm carries the total control phase `theta`.
///
/// The control phase is the value actually applied, i.e. any 2^k scaling of
/// a wave-plate angle has already been folded in by the caller.
class MeasurementSetting {
   public:
    /// Throws std::invalid_argument if passes < 1.
    MeasurementSetting(int64_t passes, double theta);

    int64_t passes() const {
        return passes_;
    }
    double theta() const {
        return theta_;
    }

    bool operator==(const MeasurementSetting &) const = default;

   private:
    int64_t passes_;
    double theta_;
};

/// P(u | phi) = [1 + (-1)^u cos(p*phi - theta)] / 2.
double likelihood(Outcome u, double phi, const MeasurementSetting &s);

/// Bernoulli draw of the detection outcome for a true phase.
Outcome sample_outcome(double phi_true, const MeasurementSetting &s, Rng &rng);

}  // namespace phaseest

#endif

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

#include "phaseest/measurement.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "phaseest/circular.h"

namespace phaseest {

MeasurementSetting::MeasurementSetting(int64_t passes, double theta) : passes_(passes), theta_(wrap_phase(theta)) {
    if (passes < 1) {
        throw std::invalid_argument("MeasurementSetting: passes must be >= 1, got " + std::to_string(passes));
    }
}

double likelihood(Outcome u, double phi, const MeasurementSetting &s) {
    // Reduce the argument first so huge p*phi keeps its precision.
    double arg = wrap_phase(wrap_phase(static_cast<double>(s.passes()) * wrap_phase(phi)) - s.theta());
    double c = std::cos(arg);
    double plus = 0.5 * (1.0 + c);
    return u == Outcome::Plus ? plus : 1.0 - plus;
}

Outcome sample_outcome(double phi_true, const MeasurementSetting &s, Rng &rng) {
    double p_plus = likelihood(Outcome::Plus, phi_true, s);
    return uniform01(rng) < p_plus ? Outcome::Plus : Outcome::Minus;
}

}  // namespace phaseest

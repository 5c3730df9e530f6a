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

#ifndef PHASEEST_STATS_H
#define PHASEEST_STATS_H

#include <complex>
#include <cstddef>
#include <span>

#include "phaseest/schemes.h"

namespace phaseest {

/// Circular spread of estimation errors err = phi_est - phi_true.
///
///   v_holevo = |<e^{i err}>|^{-2} - 1        (Holevo variance)
///   v_sine   = 4 <sin^2(err / 2)>            (its small-error approximation)
///
/// Standard errors for the Holevo quantities are leave-one-out jackknife
/// estimates; v_sine is a plain mean so its standard error is the usual one.
/// When |<e^{i err}>| < 1e-12 the Holevo quantities are +infinity.
struct HolevoStats {
    size_t count = 0;
    std::complex<double> mean_resultant;
    double v_holevo = 0;
    double v_holevo_stderr = 0;
    double holevo_std = 0;
    double holevo_std_stderr = 0;
    double v_sine = 0;
    double v_sine_stderr = 0;
};

/// Throws std::invalid_argument on empty input.
HolevoStats holevo_stats(std::span<const double> errors);
HolevoStats holevo_stats(std::span<const EstimateSample> samples);

/// sqrt(V_H) of the samples' errors.
double holevo_std(std::span<const EstimateSample> samples);

}  // namespace phaseest

#endif

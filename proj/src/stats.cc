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

#include "phaseest/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace phaseest {

namespace {

constexpr double kResultantFloor = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

double holevo_variance(std::complex<double> mean) {
    double r = std::abs(mean);
    if (r < kResultantFloor) {
        return kInf;
    }
    return std::max(0.0, 1.0 / (r * r) - 1.0);
}

// Jackknife standard error from leave-one-out replicates.
double jackknife(const std::vector<double> &reps) {
    double n = static_cast<double>(reps.size());
    double mean = 0;
    for (double v : reps) {
        if (!std::isfinite(v)) {
            return kInf;
        }
        mean += v;
    }
    mean /= n;
    double ss = 0;
    for (double v : reps) {
        ss += (v - mean) * (v - mean);
    }
    return std::sqrt((n - 1.0) / n * ss);
}

}  // namespace

HolevoStats holevo_stats(std::span<const double> errors) {
    if (errors.empty()) {
        throw std::invalid_argument("holevo_stats: no samples");
    }
    const size_t n = errors.size();
    std::vector<std::complex<double>> z(n);
    std::complex<double> sum;
    double sine_sum = 0;
    double sine_sq = 0;
    for (size_t i = 0; i < n; ++i) {
        z[i] = std::polar(1.0, errors[i]);
        sum += z[i];
        double s = std::sin(0.5 * errors[i]);
        double term = 4.0 * s * s;
        sine_sum += term;
        sine_sq += term * term;
    }

    HolevoStats st;
    st.count = n;
    st.mean_resultant = sum / static_cast<double>(n);
    st.v_holevo = holevo_variance(st.mean_resultant);
    st.holevo_std = std::sqrt(st.v_holevo);
    double dn = static_cast<double>(n);
    st.v_sine = sine_sum / dn;

    if (n < 2) {
        st.v_holevo_stderr = kInf;
        st.holevo_std_stderr = kInf;
        st.v_sine_stderr = kInf;
        return st;
    }
    double var = std::max(0.0, (sine_sq - dn * st.v_sine * st.v_sine) / (dn - 1.0));
    st.v_sine_stderr = std::sqrt(var / dn);

    std::vector<double> v_reps(n);
    std::vector<double> s_reps(n);
    for (size_t i = 0; i < n; ++i) {
        double v = holevo_variance((sum - z[i]) / (dn - 1.0));
        v_reps[i] = v;
        s_reps[i] = std::sqrt(v);
    }
    st.v_holevo_stderr = jackknife(v_reps);
    st.holevo_std_stderr = jackknife(s_reps);
    return st;
}

HolevoStats holevo_stats(std::span<const EstimateSample> samples) {
    std::vector<double> err;
    err.reserve(samples.size());
    for (const auto &s : samples) {
        err.push_back(s.phi_est - s.phi_true);
    }
    return holevo_stats(err);
}

double holevo_std(std::span<const EstimateSample> samples) {
    return holevo_stats(samples).holevo_std;
}

}  // namespace phaseest

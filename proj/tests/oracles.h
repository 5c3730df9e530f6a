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

// Reference computations used only by the tests. None of these call into the
// library beyond plain data types, so they check it rather than mirror it.

#ifndef PHASEEST_TESTS_ORACLES_H
#define PHASEEST_TESTS_ORACLES_H

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

struct Update {
    int u;
    long p;
    double theta;
};

inline double likelihood(const Update &m, double phi) {
    return 0.5 * (1.0 + (m.u == 0 ? 1.0 : -1.0) * std::cos(static_cast<double>(m.p) * phi - m.theta));
}

// Prior times likelihoods tabulated at n nodes j 2pi/n, normalized so the
// rectangle rule integrates to one.
inline std::vector<double> grid_density(const std::vector<Update> &updates, size_t n) {
    std::vector<double> f(n, 1.0);
    double sum = 0;
    for (size_t j = 0; j < n; ++j) {
        double phi = 2 * kPi * static_cast<double>(j) / static_cast<double>(n);
        for (const auto &m : updates) {
            f[j] *= likelihood(m, phi);
        }
        sum += f[j];
    }
    double scale = static_cast<double>(n) / (2 * kPi * sum);
    for (auto &v : f) {
        v *= scale;
    }
    return f;
}

// <e^{i m phi}> of a tabulated density.
inline std::complex<double> grid_moment(const std::vector<double> &density, int m) {
    std::complex<double> acc = 0;
    size_t n = density.size();
    for (size_t j = 0; j < n; ++j) {
        double phi = 2 * kPi * static_cast<double>(j) / static_cast<double>(n);
        acc += density[j] * std::polar(1.0, m * phi);
    }
    return acc * (2 * kPi / static_cast<double>(n));
}

// Fejer kernel as |sum_{n=0}^{N} e^{i n d}|^2 / (2pi (N+1)).
inline double fejer_direct(long n_q, double d) {
    std::complex<double> s = 0;
    for (long n = 0; n <= n_q; ++n) {
        s += std::polar(1.0, static_cast<double>(n) * d);
    }
    return std::norm(s) / (2 * kPi * static_cast<double>(n_q + 1));
}

inline double wrap_signed(double x) {
    return std::remainder(x, 2 * kPi);
}

}  // namespace oracle

#endif

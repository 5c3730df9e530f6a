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

#include "phaseest/posterior.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phaseest/circular.h"

namespace phaseest {

namespace {

constexpr double kMomentFloor = 1e-12;

}  // namespace

PhasePosterior PhasePosterior::uniform() {
    return PhasePosterior({std::complex<double>(1.0, 0.0)});
}

PhasePosterior PhasePosterior::from_moments(std::vector<std::complex<double>> moments) {
    if (moments.empty() || !(moments[0].real() > 0) || moments[0].imag() != 0) {
        throw std::invalid_argument("PhasePosterior::from_moments: c_0 must be a positive real");
    }
    double c0 = moments[0].real();
    for (auto &c : moments) {
        c /= c0;
    }
    return PhasePosterior(std::move(moments));
}

std::complex<double> PhasePosterior::moment(int64_t m) const {
    int64_t a = m < 0 ? -m : m;
    if (a > degree()) {
        return {};
    }
    auto c = coeffs_[static_cast<size_t>(a)];
    return m < 0 ? std::conj(c) : c;
}

double PhasePosterior::density(double phi) const {
    // c_0 + 2 Re sum_{m>0} c_m e^{-i m phi}
    double acc = coeffs_[0].real();
    for (size_t m = 1; m < coeffs_.size(); ++m) {
        double a = static_cast<double>(m) * phi;
        acc += 2.0 * (coeffs_[m].real() * std::cos(a) + coeffs_[m].imag() * std::sin(a));
    }
    return acc / kTwoPi;
}

void PhasePosterior::update(Outcome u, const MeasurementSetting &s) {
    // (1 + sign cos(p phi - theta)) / 2
    //   = 1/2 + (sign/4) [e^{-i theta} e^{i p phi} + e^{i theta} e^{-i p phi}],
    // and e^{i p phi} e^{-i m phi} = e^{-i (m-p) phi}.
    const int64_t d = degree();
    const int64_t p = s.passes();
    const double sign = u == Outcome::Plus ? 1.0 : -1.0;
    const std::complex<double> down = 0.25 * sign * std::polar(1.0, -s.theta());
    const std::complex<double> up = std::conj(down);

    std::vector<std::complex<double>> next(static_cast<size_t>(d + p + 1));
    for (int64_t n = 0; n <= d + p; ++n) {
        std::complex<double> v = n <= d ? 0.5 * coeffs_[static_cast<size_t>(n)] : std::complex<double>{};
        if (n + p <= d) {
            v += down * coeffs_[static_cast<size_t>(n + p)];
        }
        v += up * moment(n - p);
        next[static_cast<size_t>(n)] = v;
    }

    double norm = next[0].real();
    if (!(norm > 0)) {
        throw std::domain_error("PhasePosterior::update: outcome has zero probability under the posterior");
    }
    for (auto &c : next) {
        c /= norm;
    }
    next[0] = 1.0;
    while (next.size() > 1 && next.back() == std::complex<double>{}) {
        next.pop_back();
    }
    coeffs_ = std::move(next);
}

double PhasePosterior::point_estimate() const {
    auto c1 = moment(1);
    if (std::abs(c1) < kMomentFloor) {
        throw DegenerateEstimate("posterior has vanishing first circular moment");
    }
    return wrap_phase(std::arg(c1));
}

double PhasePosterior::holevo_width() const {
    double r = std::abs(moment(1));
    if (r < kMomentFloor) {
        return std::numeric_limits<double>::infinity();
    }
    return std::sqrt(std::max(0.0, 1.0 / (r * r) - 1.0));
}

Estimate PhasePosterior::estimate() const {
    auto c1 = moment(1);
    if (std::abs(c1) >= kMomentFloor) {
        return {wrap_phase(std::arg(c1)), false};
    }
    for (int64_t m = 2; m <= degree(); ++m) {
        auto cm = moment(m);
        if (std::abs(cm) >= kMomentFloor) {
            return {wrap_phase(std::arg(cm)) / static_cast<double>(m), true};
        }
    }
    return {0.0, true};
}

PhasePosterior bayes_update(PhasePosterior post, Outcome u, const MeasurementSetting &s) {
    post.update(u, s);
    return post;
}

GridPosterior::GridPosterior(size_t points) : values_(points, 1.0), total_(static_cast<double>(points)) {
    if (points < 2) {
        throw std::invalid_argument("GridPosterior: need at least 2 points");
    }
}

double GridPosterior::node(size_t j) const {
    return kTwoPi * static_cast<double>(j) / static_cast<double>(values_.size());
}

double GridPosterior::density_at(size_t j) const {
    // Trapezoid weight on a periodic grid is 2pi/n.
    return values_[j] / (total_ * kTwoPi / static_cast<double>(values_.size()));
}

void GridPosterior::update(Outcome u, const MeasurementSetting &s) {
    double peak = 0;
    double total = 0;
    for (size_t j = 0; j < values_.size(); ++j) {
        values_[j] *= likelihood(u, node(j), s);
        peak = std::max(peak, values_[j]);
    }
    if (!(peak > 0)) {
        throw std::domain_error("GridPosterior::update: outcome has zero probability on the grid");
    }
    for (auto &v : values_) {
        v /= peak;
        total += v;
    }
    total_ = total;
}

std::complex<double> GridPosterior::mean_resultant() const {
    std::complex<double> acc;
    for (size_t j = 0; j < values_.size(); ++j) {
        acc += values_[j] * std::polar(1.0, node(j));
    }
    return acc / total_;
}

Estimate GridPosterior::estimate() const {
    auto c1 = mean_resultant();
    if (std::abs(c1) < kMomentFloor) {
        return {0.0, true};
    }
    return {wrap_phase(std::arg(c1)), false};
}

}  // namespace phaseest

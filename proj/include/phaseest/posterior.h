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

#ifndef PHASEEST_POSTERIOR_H
#define PHASEEST_POSTERIOR_H

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "phaseest/measurement.h"

namespace phaseest {

/// Raised when a point estimate is requested from a posterior whose first
/// circular moment vanishes.
class DegenerateEstimate : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A phase estimate plus a flag recording that the primary estimator was
/// undefined and a fallback rule produced the value.
struct Estimate {
    double phase = 0;
    bool degenerate = false;
};

/// Probability density over phi in [0, 2pi), stored as trigonometric moments:
///
///     P(phi) = (1/2pi) * sum_{m=-D..D} c_m exp(-i m phi),   c_{-m} = conj(c_m).
///
/// With this convention c_m = <exp(i m phi)>, so c_1 is the mean resultant
/// vector. Only c_0..c_D are stored. Multiplying by a measurement likelihood
/// shifts moments by +-p, which makes every update exact.
class PhasePosterior {
   public:
    /// Uniform density 1/(2pi).
    static PhasePosterior uniform();

    /// Builds a posterior from raw moments c_0..c_D. Rescales so c_0 = 1.
    /// Throws std::invalid_argument if c_0 is not a positive real.
    static PhasePosterior from_moments(std::vector<std::complex<double>> moments);

    int64_t degree() const {
        return static_cast<int64_t>(coeffs_.size()) - 1;
    }

    /// c_m for any m; zero beyond the degree.
    std::complex<double> moment(int64_t m) const;

    const std::vector<std::complex<double>> &moments() const {
        return coeffs_;
    }

    /// Density value at phi (not clamped; may dip below zero by rounding).
    double density(double phi) const;

    /// Multiplies by likelihood(u, ., s) and renormalizes. Throws
    /// std::domain_error if the product vanishes identically.
    void update(Outcome u, const MeasurementSetting &s);

    /// arg(c_1) in [0, 2pi). Throws DegenerateEstimate when |c_1| < 1e-12.
    double point_estimate() const;

    /// sqrt(|c_1|^{-2} - 1); +infinity when |c_1| < 1e-12.
    double holevo_width() const;

    /// point_estimate() with the fallback rule applied instead of throwing:
    /// arg(c_m)/m for the lowest m with |c_m| >= 1e-12, taking the branch in
    /// [0, 2pi/m). Returns 0 if every moment vanishes.
    Estimate estimate() const;

   private:
    explicit PhasePosterior(std::vector<std::complex<double>> coeffs) : coeffs_(std::move(coeffs)) {
    }

    std::vector<std::complex<double>> coeffs_;
};

/// Value-semantics form of PhasePosterior::update.
PhasePosterior bayes_update(PhasePosterior post, Outcome u, const MeasurementSetting &s);

inline PhasePosterior uniform_prior() {
    return PhasePosterior::uniform();
}

/// Posterior tabulated on an equispaced grid. Used to cross-check the moment
/// representation and for campaigns where the moment degree would be huge.
class GridPosterior {
   public:
    static constexpr size_t kDefaultPoints = 8192;

    explicit GridPosterior(size_t points = kDefaultPoints);

    size_t size() const {
        return values_.size();
    }
    double node(size_t j) const;

    /// Normalized density at node j.
    double density_at(size_t j) const;

    void update(Outcome u, const MeasurementSetting &s);

    /// First circular moment by the trapezoid rule (exact for trigonometric
    /// polynomials of degree below the grid size).
    std::complex<double> mean_resultant() const;

    Estimate estimate() const;

   private:
    std::vector<double> values_;
    double total_ = 0;
};

}  // namespace phaseest

#endif

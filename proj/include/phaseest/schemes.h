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

#ifndef PHASEEST_SCHEMES_H
#define PHASEEST_SCHEMES_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phaseest/measurement.h"
#include "phaseest/posterior.h"
#include "phaseest/rng.h"

namespace phaseest {

enum class SchemeKind { Standard, QPEA, Hybrid, NonAdaptive, FixedM };

/// How control phases are laid out across repeated p=2^k measurements.
///   Alternate0HalfPi:  0, pi/2, 0, pi/2, ...
///   IncrementPerBlock: 0, pi/M, 2pi/M, ... restarting at each block.
enum class ThetaPolicy { Alternate0HalfPi, IncrementPerBlock };

/// Estimator used by the hybrid scheme.
///   Bayesian:      all outcomes go into one posterior, estimate = arg <e^{i phi}>.
///   ProofCombiner: use the QPEA estimate if it lies within 2*dphi of the
///                  standard estimate, otherwise the standard estimate.
enum class HybridMode { Bayesian, ProofCombiner };

std::string_view to_string(SchemeKind kind);
std::optional<SchemeKind> parse_scheme_kind(std::string_view name);

struct SchemeConfig {
    SchemeKind kind = SchemeKind::NonAdaptive;
    /// Largest pass exponent; multiplicities run over 2^0..2^K.
    int K = 0;
    /// Repetitions at the largest multiplicity (FixedM: repetitions everywhere).
    int M_K = 1;
    int mu = 0;
    /// Standard-interferometry budget for Standard and Hybrid. For Hybrid, 0
    /// means the default 2^K.
    int64_t N_S = 0;
    ThetaPolicy theta_policy = ThetaPolicy::IncrementPerBlock;
    HybridMode hybrid_mode = HybridMode::Bayesian;
    /// Draw a uniform reference phase xi and shift every control phase by p*xi.
    bool randomize_reference = false;

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;

    /// N_S after applying the Hybrid default.
    int64_t standard_budget() const;

    /// M(K,k) = M_K + mu (K - k).
    int repetitions(int k) const;
};

/// One trial: the phase, the estimate and the resources spent.
struct EstimateSample {
    double phi_true = 0;
    double phi_est = 0;
    int64_t n_resources = 0;
    bool degenerate = false;
};

/// Total applications of the phase shift, sum over measurements of p.
int64_t total_resources(const SchemeConfig &cfg);

/// Number of single-photon measurements the scheme performs.
int64_t measurement_count(const SchemeConfig &cfg);

/// Anything that answers a measurement request with an outcome. Scheme
/// drivers only talk to this interface, so the same code path serves Monte
/// Carlo sampling and exhaustive enumeration.
class OutcomeSource {
   public:
    virtual ~OutcomeSource() = default;
    virtual Outcome measure(const MeasurementSetting &s) = 0;
};

/// Samples outcomes for a fixed true phase and counts what was spent.
class SampledSource final : public OutcomeSource {
   public:
    SampledSource(double phi_true, Rng &rng) : phi_true_(phi_true), rng_(&rng) {
    }

    Outcome measure(const MeasurementSetting &s) override;

    int64_t calls() const {
        return calls_;
    }
    int64_t resources() const {
        return resources_;
    }

   private:
    double phi_true_;
    Rng *rng_;
    int64_t calls_ = 0;
    int64_t resources_ = 0;
};

/// Adds p*xi to every requested control phase before forwarding.
class ShiftedSource final : public OutcomeSource {
   public:
    ShiftedSource(OutcomeSource &inner, double xi) : inner_(&inner), xi_(xi) {
    }
    Outcome measure(const MeasurementSetting &s) override;

   private:
    OutcomeSource *inner_;
    double xi_;
};

/// Control phase of the j-th of `count` repeated measurements in a block.
double block_theta(ThetaPolicy policy, int j, int count);

/// Precomputed settings for the non-adaptive scheme, blocks in ascending k.
std::vector<MeasurementSetting> nonadaptive_schedule(int K, int M_K, int mu,
                                                     ThetaPolicy policy = ThetaPolicy::IncrementPerBlock);

/// dphi = (pi/3) sqrt(f(N_S)/N_S), the agreement radius used by the combiner.
double combiner_radius(int64_t n_s);

/// phi_q when circular_distance(phi_s, phi_q) < 2*dphi, else phi_s.
double combine_estimates(double phi_s, double phi_q, double delta_phi);

// Drivers. Each returns the estimate in the frame of the source it is given.

/// Plus-outcome frequencies of the two standard arms.
struct StandardFrequencies {
    /// Fraction of Plus at theta=0; estimates (1 + cos phi)/2.
    double nu_cos = 0;
    /// Fraction of Plus at theta=pi/2; estimates (1 + sin phi)/2.
    double nu_sin = 0;
};

/// Runs the n_s standard measurements and returns the arm frequencies.
StandardFrequencies standard_frequencies(int64_t n_s, OutcomeSource &source);

/// n_s/2 measurements at theta=0 and n_s/2 at theta=pi/2 (interleaved);
/// estimate = arg[(2 nu_1 - 1) + i (2 nu_2 - 1)].
Estimate standard_estimate(int64_t n_s, OutcomeSource &source);

/// Iterative digit extraction, k = K down to 0, least significant digit first.
Estimate qpea_estimate(int K, OutcomeSource &source);

Estimate hybrid_estimate(const SchemeConfig &cfg, OutcomeSource &source);

/// Feeds every setting to a uniform prior; estimate = arg <e^{i phi}>.
Estimate schedule_estimate(std::span<const MeasurementSetting> settings, OutcomeSource &source);

/// Runs any configured scheme against `source` with reference phase xi: all
/// control phases are shifted by p*xi and xi is added back to the estimate.
Estimate estimate_scheme(const SchemeConfig &cfg, OutcomeSource &source, double xi);

/// One Monte Carlo trial. When cfg.randomize_reference is set, xi is drawn
/// from rng first; otherwise `xi` is used as given.
EstimateSample run_scheme(const SchemeConfig &cfg, double phi_true, Rng &rng, double xi = 0);

EstimateSample run_standard(int64_t n_s, double phi_true, Rng &rng);
EstimateSample run_qpea(int K, double phi_true, Rng &rng, bool randomize_reference);
EstimateSample run_hybrid(int K, double phi_true, Rng &rng, HybridMode mode);
EstimateSample run_nonadaptive(int K, int M_K, int mu, double phi_true, Rng &rng);
EstimateSample run_fixed_m(int K, int M, double phi_true, Rng &rng);

}  // namespace phaseest

#endif

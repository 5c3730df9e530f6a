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

#include "phaseest/schemes.h"

#include <cmath>
#include <stdexcept>

#include "phaseest/bounds.h"
#include "phaseest/circular.h"

namespace phaseest {

namespace {

// Keeps 2^K and the resource sums comfortably inside int64.
constexpr int kMaxK = 40;

int64_t pow2(int k) {
    return int64_t{1} << k;
}

void require(bool ok, const std::string &msg) {
    if (!ok) {
        throw std::invalid_argument("SchemeConfig: " + msg);
    }
}

std::vector<MeasurementSetting> standard_settings(int64_t n, ThetaPolicy policy) {
    std::vector<MeasurementSetting> out;
    out.reserve(static_cast<size_t>(n));
    for (int64_t j = 0; j < n; ++j) {
        out.emplace_back(1, block_theta(policy, static_cast<int>(j), static_cast<int>(n)));
    }
    return out;
}

}  // namespace

std::string_view to_string(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::Standard:
            return "standard";
        case SchemeKind::QPEA:
            return "qpea";
        case SchemeKind::Hybrid:
            return "hybrid";
        case SchemeKind::NonAdaptive:
            return "nonadaptive";
        case SchemeKind::FixedM:
            return "fixedm";
    }
    return "unknown";
}

std::optional<SchemeKind> parse_scheme_kind(std::string_view name) {
    for (auto k : {SchemeKind::Standard, SchemeKind::QPEA, SchemeKind::Hybrid, SchemeKind::NonAdaptive,
                   SchemeKind::FixedM}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

void SchemeConfig::validate() const {
    require(K >= 0 && K <= kMaxK, "K must be in [0, " + std::to_string(kMaxK) + "]");
    switch (kind) {
        case SchemeKind::Standard:
            require(N_S >= 2 && N_S % 2 == 0, "standard scheme needs an even N_S >= 2");
            break;
        case SchemeKind::QPEA:
            break;
        case SchemeKind::Hybrid: {
            require(K >= 1, "hybrid scheme needs K >= 1");
            int64_t ns = standard_budget();
            require(ns >= 2 && ns % 2 == 0, "hybrid scheme needs an even N_S >= 2");
            break;
        }
        case SchemeKind::FixedM:
            require(mu == 0, "fixed-M scheme requires mu = 0");
            require(M_K >= 1, "M must be >= 1");
            break;
        case SchemeKind::NonAdaptive:
            require(M_K >= 1, "M_K must be >= 1");
            require(mu >= 0, "mu must be >= 0");
            break;
    }
}

int64_t SchemeConfig::standard_budget() const {
    if (kind == SchemeKind::Hybrid && N_S == 0) {
        return pow2(K);
    }
    return N_S;
}

int SchemeConfig::repetitions(int k) const {
    return M_K + mu * (K - k);
}

int64_t total_resources(const SchemeConfig &cfg) {
    cfg.validate();
    switch (cfg.kind) {
        case SchemeKind::Standard:
            return cfg.N_S;
        case SchemeKind::QPEA:
            return pow2(cfg.K + 1) - 1;
        case SchemeKind::Hybrid:
            return pow2(cfg.K + 1) - 1 + cfg.standard_budget();
        case SchemeKind::NonAdaptive:
        case SchemeKind::FixedM: {
            int64_t n = 0;
            for (int k = 0; k <= cfg.K; ++k) {
                n += cfg.repetitions(k) * pow2(k);
            }
            return n;
        }
    }
    return 0;
}

int64_t measurement_count(const SchemeConfig &cfg) {
    cfg.validate();
    switch (cfg.kind) {
        case SchemeKind::Standard:
            return cfg.N_S;
        case SchemeKind::QPEA:
            return cfg.K + 1;
        case SchemeKind::Hybrid:
            return cfg.K + 1 + cfg.standard_budget();
        case SchemeKind::NonAdaptive:
        case SchemeKind::FixedM: {
            int64_t n = 0;
            for (int k = 0; k <= cfg.K; ++k) {
                n += cfg.repetitions(k);
            }
            return n;
        }
    }
    return 0;
}

Outcome SampledSource::measure(const MeasurementSetting &s) {
    ++calls_;
    resources_ += s.passes();
    return sample_outcome(phi_true_, s, *rng_);
}

Outcome ShiftedSource::measure(const MeasurementSetting &s) {
    return inner_->measure(MeasurementSetting(s.passes(), s.theta() + static_cast<double>(s.passes()) * xi_));
}

double block_theta(ThetaPolicy policy, int j, int count) {
    switch (policy) {
        case ThetaPolicy::Alternate0HalfPi:
            return j % 2 == 0 ? 0.0 : kPi / 2;
        case ThetaPolicy::IncrementPerBlock:
            return kPi * static_cast<double>(j) / static_cast<double>(count);
    }
    return 0;
}

std::vector<MeasurementSetting> nonadaptive_schedule(int K, int M_K, int mu, ThetaPolicy policy) {
    SchemeConfig cfg{.kind = SchemeKind::NonAdaptive, .K = K, .M_K = M_K, .mu = mu};
    cfg.validate();
    std::vector<MeasurementSetting> out;
    for (int k = 0; k <= K; ++k) {
        int reps = cfg.repetitions(k);
        for (int j = 0; j < reps; ++j) {
            // Control phase steps are taken in total-phase units, so every
            // block spreads its references evenly over [0, pi).
            out.emplace_back(pow2(k), block_theta(policy, j, reps));
        }
    }
    return out;
}

double combiner_radius(int64_t n_s) {
    double ns = static_cast<double>(n_s);
    return (kPi / 3.0) * std::sqrt(f_of(n_s) / ns);
}

double combine_estimates(double phi_s, double phi_q, double delta_phi) {
    return circular_distance(phi_s, phi_q) < 2.0 * delta_phi ? phi_q : phi_s;
}

StandardFrequencies standard_frequencies(int64_t n_s, OutcomeSource &source) {
    if (n_s < 2 || n_s % 2 != 0) {
        throw std::invalid_argument("standard_estimate: N_S must be even and >= 2");
    }
    int64_t plus[2] = {0, 0};
    for (int64_t j = 0; j < n_s; ++j) {
        int arm = static_cast<int>(j % 2);
        MeasurementSetting s(1, arm == 0 ? 0.0 : kPi / 2);
        if (source.measure(s) == Outcome::Plus) {
            ++plus[arm];
        }
    }
    double half = static_cast<double>(n_s / 2);
    return {static_cast<double>(plus[0]) / half, static_cast<double>(plus[1]) / half};
}

Estimate standard_estimate(int64_t n_s, OutcomeSource &source) {
    StandardFrequencies nu = standard_frequencies(n_s, source);
    double x = 2.0 * nu.nu_cos - 1.0;
    double y = 2.0 * nu.nu_sin - 1.0;
    if (x == 0.0 && y == 0.0) {
        return {0.0, true};
    }
    return {wrap_phase(std::atan2(y, x)), false};
}

Estimate qpea_estimate(int K, OutcomeSource &source) {
    if (K < 0 || K > kMaxK) {
        throw std::invalid_argument("qpea_estimate: K out of range");
    }
    // Digit read at multiplicity 2^k is worth pi / 2^k; the correction for
    // that measurement is 2^k times the digits already read.
    double partial = 0;
    for (int k = K; k >= 0; --k) {
        double p = static_cast<double>(pow2(k));
        Outcome u = source.measure(MeasurementSetting(pow2(k), p * partial));
        partial += kPi * outcome_bit(u) / p;
    }
    return {wrap_phase(partial), false};
}

Estimate hybrid_estimate(const SchemeConfig &cfg, OutcomeSource &source) {
    const int64_t ns = cfg.standard_budget();
    if (cfg.hybrid_mode == HybridMode::ProofCombiner) {
        Estimate q = qpea_estimate(cfg.K, source);
        Estimate s = standard_estimate(ns, source);
        return {wrap_phase(combine_estimates(s.phase, q.phase, combiner_radius(ns))), s.degenerate};
    }

    // Record the adaptive settings so the posterior sees exactly what was run.
    struct Recorder final : OutcomeSource {
        OutcomeSource *inner;
        PhasePosterior post = PhasePosterior::uniform();
        explicit Recorder(OutcomeSource &src) : inner(&src) {
        }
        Outcome measure(const MeasurementSetting &s) override {
            Outcome u = inner->measure(s);
            post.update(u, s);
            return u;
        }
    } rec(source);

    qpea_estimate(cfg.K, rec);
    for (const auto &s : standard_settings(ns, cfg.theta_policy)) {
        rec.measure(s);
    }
    return rec.post.estimate();
}

Estimate schedule_estimate(std::span<const MeasurementSetting> settings, OutcomeSource &source) {
    PhasePosterior post = PhasePosterior::uniform();
    for (const auto &s : settings) {
        post.update(source.measure(s), s);
    }
    return post.estimate();
}

Estimate estimate_scheme(const SchemeConfig &cfg, OutcomeSource &source, double xi) {
    cfg.validate();
    ShiftedSource shifted(source, xi);
    Estimate e;
    switch (cfg.kind) {
        case SchemeKind::Standard:
            e = standard_estimate(cfg.N_S, shifted);
            break;
        case SchemeKind::QPEA:
            e = qpea_estimate(cfg.K, shifted);
            break;
        case SchemeKind::Hybrid:
            e = hybrid_estimate(cfg, shifted);
            break;
        case SchemeKind::NonAdaptive:
        case SchemeKind::FixedM: {
            auto schedule = nonadaptive_schedule(cfg.K, cfg.M_K, cfg.mu, cfg.theta_policy);
            e = schedule_estimate(schedule, shifted);
            break;
        }
    }
    e.phase = wrap_phase(e.phase + xi);
    return e;
}

EstimateSample run_scheme(const SchemeConfig &cfg, double phi_true, Rng &rng, double xi) {
    if (cfg.randomize_reference) {
        xi = uniform_phase(rng);
    }
    SampledSource source(phi_true, rng);
    Estimate e = estimate_scheme(cfg, source, xi);
    return {wrap_phase(phi_true), e.phase, source.resources(), e.degenerate};
}

EstimateSample run_standard(int64_t n_s, double phi_true, Rng &rng) {
    return run_scheme({.kind = SchemeKind::Standard, .N_S = n_s}, phi_true, rng);
}

EstimateSample run_qpea(int K, double phi_true, Rng &rng, bool randomize_reference) {
    return run_scheme({.kind = SchemeKind::QPEA, .K = K, .randomize_reference = randomize_reference}, phi_true,
                      rng);
}

EstimateSample run_hybrid(int K, double phi_true, Rng &rng, HybridMode mode) {
    SchemeConfig cfg{.kind = SchemeKind::Hybrid, .K = K};
    cfg.hybrid_mode = mode;
    if (mode == HybridMode::ProofCombiner) {
        cfg.theta_policy = ThetaPolicy::Alternate0HalfPi;
        cfg.randomize_reference = true;
    }
    return run_scheme(cfg, phi_true, rng);
}

EstimateSample run_nonadaptive(int K, int M_K, int mu, double phi_true, Rng &rng) {
    return run_scheme({.kind = SchemeKind::NonAdaptive, .K = K, .M_K = M_K, .mu = mu}, phi_true, rng);
}

EstimateSample run_fixed_m(int K, int M, double phi_true, Rng &rng) {
    return run_scheme({.kind = SchemeKind::FixedM, .K = K, .M_K = M, .mu = 0}, phi_true, rng);
}

}  // namespace phaseest

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

#include "phaseest/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>

#include "phaseest/circular.h"

namespace phaseest {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Replays a fixed outcome string and multiplies up its probability at phi.
class ReplaySource final : public OutcomeSource {
   public:
    ReplaySource(uint64_t bits, double phi) : bits_(bits), phi_(phi) {
    }

    Outcome measure(const MeasurementSetting &s) override {
        Outcome u = ((bits_ >> index_) & 1u) ? Outcome::Minus : Outcome::Plus;
        ++index_;
        probability_ *= likelihood(u, phi_, s);
        return u;
    }

    double probability() const {
        return probability_;
    }

   private:
    uint64_t bits_;
    double phi_;
    int index_ = 0;
    double probability_ = 1.0;
};

}  // namespace

std::string_view to_string(PhiPolicy policy) {
    return policy == PhiPolicy::UniformRandom ? "uniform" : "fixed";
}

std::optional<PhiPolicy> parse_phi_policy(std::string_view name) {
    if (name == "uniform") {
        return PhiPolicy::UniformRandom;
    }
    if (name == "fixed") {
        return PhiPolicy::FixedWithRandomReference;
    }
    return std::nullopt;
}

unsigned campaign_threads() {
    if (const char *env = std::getenv("PHASEEST_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<BoundReport> scheme_bound(const SchemeConfig &cfg) {
    switch (cfg.kind) {
        case SchemeKind::Hybrid:
            return hybrid_variance_bound((int64_t{1} << (cfg.K + 1)) - 1, cfg.standard_budget());
        case SchemeKind::NonAdaptive:
        case SchemeKind::FixedM:
            return nonadaptive_vmax(cfg.K, linear_schedule(cfg.M_K, cfg.mu));
        case SchemeKind::Standard:
        case SchemeKind::QPEA:
            break;
    }
    return std::nullopt;
}

std::vector<EstimateSample> run_trials(const SchemeConfig &cfg, const CampaignOptions &opts, uint64_t stream) {
    cfg.validate();
    if (opts.trials < 1) {
        throw std::invalid_argument("run_trials: trials must be >= 1");
    }
    const size_t n = static_cast<size_t>(opts.trials);
    std::vector<EstimateSample> out(n);

    auto one = [&](size_t i) {
        Rng rng = trial_rng(opts.seed, stream, i);
        double phi = opts.fixed_phi;
        double xi = 0;
        if (opts.phi_policy == PhiPolicy::UniformRandom) {
            phi = uniform_phase(rng);
        } else {
            xi = uniform_phase(rng);
        }
        out[i] = run_scheme(cfg, phi, rng, xi);
    };

    unsigned threads = opts.threads ? opts.threads : campaign_threads();
    threads = static_cast<unsigned>(std::min<size_t>(threads, n));
    if (threads <= 1) {
        for (size_t i = 0; i < n; ++i) {
            one(i);
        }
        return out;
    }

    constexpr size_t kChunk = 64;
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                try {
                    for (;;) {
                        size_t begin = next.fetch_add(kChunk);
                        if (begin >= n || failed.load()) {
                            return;
                        }
                        for (size_t i = begin; i < std::min(n, begin + kChunk); ++i) {
                            one(i);
                        }
                    }
                } catch (...) {
                    if (!failed.exchange(true)) {
                        failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

CampaignRow summarize(const SchemeConfig &cfg, std::span<const EstimateSample> samples) {
    CampaignRow row;
    row.cfg = cfg;
    row.N = total_resources(cfg);
    row.trials = static_cast<int64_t>(samples.size());
    HolevoStats st = holevo_stats(samples);
    double n = static_cast<double>(row.N);
    row.holevo_std = st.holevo_std;
    row.std_x_sqrtN = st.holevo_std * std::sqrt(n);
    row.std_x_N = st.holevo_std * n;
    row.mc_stderr = st.holevo_std_stderr;
    row.v_holevo = st.v_holevo;
    row.v_holevo_stderr = st.v_holevo_stderr;
    row.v_sine = st.v_sine;
    row.v_sine_stderr = st.v_sine_stderr;
    row.sql = sql(n);
    row.heisenberg = heisenberg_limit(n);
    row.bound = scheme_bound(cfg);
    row.degenerate_count = std::count_if(samples.begin(), samples.end(), [](const auto &s) { return s.degenerate; });
    return row;
}

CampaignSummary run_campaign(std::span<const SchemeConfig> cfgs, const CampaignOptions &opts) {
    CampaignSummary summary;
    for (size_t i = 0; i < cfgs.size(); ++i) {
        try {
            auto samples = run_trials(cfgs[i], opts, i);
            summary.rows.push_back(summarize(cfgs[i], samples));
        } catch (const std::exception &e) {
            CampaignRow row;
            row.cfg = cfgs[i];
            row.trials = 0;
            row.holevo_std = row.std_x_sqrtN = row.std_x_N = row.mc_stderr = kNaN;
            row.v_holevo = row.v_holevo_stderr = row.v_sine = row.v_sine_stderr = kNaN;
            row.sql = row.heisenberg = kNaN;
            try {
                row.N = total_resources(cfgs[i]);
                row.sql = sql(static_cast<double>(row.N));
                row.heisenberg = heisenberg_limit(static_cast<double>(row.N));
            } catch (const std::exception &) {
                row.N = 0;
            }
            row.error = e.what();
            summary.rows.push_back(std::move(row));
        }
    }
    return summary;
}

std::vector<double> phase_grid(size_t n, bool midpoint) {
    std::vector<double> g(n);
    double offset = midpoint ? 0.5 : 0.0;
    for (size_t i = 0; i < n; ++i) {
        g[i] = kTwoPi * (static_cast<double>(i) + offset) / static_cast<double>(n);
    }
    return g;
}

OracleResult exact_oracle(const SchemeConfig &cfg, std::span<const double> phi_grid, std::span<const double> xi_grid) {
    cfg.validate();
    if (phi_grid.empty() || xi_grid.empty()) {
        throw std::invalid_argument("exact_oracle: grids must be non-empty");
    }
    OracleResult res;
    res.measurements = measurement_count(cfg);
    const int64_t points = static_cast<int64_t>(phi_grid.size() * xi_grid.size());
    if (res.measurements > 20 || (int64_t{1} << res.measurements) * points > kEnumerationCap) {
        throw EnumerationCapExceeded("exact_oracle: 2^" + std::to_string(res.measurements) + " outcome strings x " +
                                     std::to_string(points) + " grid points exceeds the enumeration cap of 2^20");
    }
    const uint64_t strings = uint64_t{1} << res.measurements;
    res.branches.reserve(static_cast<size_t>(strings) * static_cast<size_t>(points));

    std::complex<double> resultant;
    double sine = 0;
    for (double phi : phi_grid) {
        for (double xi : xi_grid) {
            for (uint64_t bits = 0; bits < strings; ++bits) {
                ReplaySource replay(bits, phi);
                Estimate e;
                try {
                    e = estimate_scheme(cfg, replay, xi);
                } catch (const std::domain_error &) {
                    // The posterior vanished, so this string is impossible for every phase.
                    if (replay.probability() != 0.0) {
                        throw;
                    }
                    continue;
                }
                double p = replay.probability();
                double err = e.phase - phi;
                resultant += p * std::polar(1.0, err);
                double s = std::sin(0.5 * err);
                sine += p * 4.0 * s * s;
                res.branches.push_back({phi, xi, e.phase, p, e.degenerate});
            }
        }
    }
    res.mean_resultant = resultant / static_cast<double>(points);
    res.v_sine = sine / static_cast<double>(points);
    double r = std::abs(res.mean_resultant);
    res.v_holevo = r < 1e-12 ? std::numeric_limits<double>::infinity() : 1.0 / (r * r) - 1.0;
    return res;
}

double fejer_kernel(int64_t n_q, double delta) {
    double m = static_cast<double>(n_q + 1);
    double den = std::sin(0.5 * delta);
    if (std::abs(den) < 1e-12) {
        return m / kTwoPi;
    }
    double num = std::sin(0.5 * m * delta);
    return num * num / (kTwoPi * m * den * den);
}

double qpea_kernel_linf(int K, std::span<const double> phi_grid, std::span<const double> xi_grid) {
    SchemeConfig cfg{.kind = SchemeKind::QPEA, .K = K};
    OracleResult res = exact_oracle(cfg, phi_grid, xi_grid);
    const int64_t n_q = (int64_t{1} << (K + 1)) - 1;
    const double scale = static_cast<double>(n_q + 1) / kTwoPi;
    double worst = 0;
    for (const auto &b : res.branches) {
        double err = b.phi_est - b.phi;
        worst = std::max(worst, std::abs(b.probability * scale - fejer_kernel(n_q, err)));
    }
    return worst;
}

}  // namespace phaseest

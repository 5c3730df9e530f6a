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

#ifndef PHASEEST_HARNESS_H
#define PHASEEST_HARNESS_H

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "phaseest/bounds.h"
#include "phaseest/schemes.h"
#include "phaseest/stats.h"

namespace phaseest {

/// How each trial chooses the true phase.
///   UniformRandom:            phi ~ U[0, 2pi), reference 0 (unless the
///                             scheme randomizes its own reference).
///   FixedWithRandomReference: phi fixed, reference xi ~ U[0, 2pi).
enum class PhiPolicy { UniformRandom, FixedWithRandomReference };

std::string_view to_string(PhiPolicy policy);
std::optional<PhiPolicy> parse_phi_policy(std::string_view name);

struct CampaignOptions {
    int64_t trials = 10000;
    uint64_t seed = 1;
    PhiPolicy phi_policy = PhiPolicy::UniformRandom;
    double fixed_phi = 0;
    /// 0 picks campaign_threads().
    unsigned threads = 0;
};

struct CampaignRow {
    SchemeConfig cfg;
    int64_t N = 0;
    int64_t trials = 0;
    double holevo_std = 0;
    double std_x_sqrtN = 0;
    double std_x_N = 0;
    /// Jackknife standard error of holevo_std.
    double mc_stderr = 0;
    double v_holevo = 0;
    double v_holevo_stderr = 0;
    double v_sine = 0;
    double v_sine_stderr = 0;
    double sql = 0;
    double heisenberg = 0;
    std::optional<BoundReport> bound;
    int64_t degenerate_count = 0;
    /// Non-empty when the row could not be run; statistics are then NaN.
    std::string error;
};

struct CampaignSummary {
    std::vector<CampaignRow> rows;
};

/// Thread count from PHASEEST_THREADS, else hardware concurrency (>= 1).
unsigned campaign_threads();

/// Analytic variance bound that applies to a scheme, if any.
std::optional<BoundReport> scheme_bound(const SchemeConfig &cfg);

/// Runs `trials` independent trials. Trial i draws everything from
/// trial_rng(seed, stream, i), so the output is identical for any thread count.
std::vector<EstimateSample> run_trials(const SchemeConfig &cfg, const CampaignOptions &opts, uint64_t stream);

/// Aggregates one configuration into a row (does not catch).
CampaignRow summarize(const SchemeConfig &cfg, std::span<const EstimateSample> samples);

/// One row per configuration, row i using stream i. Failures become rows with
/// `error` set; the campaign itself never throws for a bad configuration.
CampaignSummary run_campaign(std::span<const SchemeConfig> cfgs, const CampaignOptions &opts);

// Exhaustive enumeration ------------------------------------------------------

/// Upper limit on outcome strings x phase grid x reference grid.
inline constexpr int64_t kEnumerationCap = int64_t{1} << 20;

class EnumerationCapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// One outcome string evaluated at one (phi, xi) grid point.
struct OracleBranch {
    double phi = 0;
    double xi = 0;
    double phi_est = 0;
    double probability = 0;
    bool degenerate = false;
};

struct OracleResult {
    std::vector<OracleBranch> branches;
    /// Grid-averaged <e^{i(phi_est - phi)}>.
    std::complex<double> mean_resultant;
    double v_holevo = 0;
    double v_sine = 0;
    int64_t measurements = 0;
};

/// n equispaced points on [0, 2pi); midpoints of the cells when `midpoint`.
std::vector<double> phase_grid(size_t n, bool midpoint = false);

/// Enumerates every outcome string of the scheme for each (phi, xi) pair,
/// weighting each string by its exact probability. The grids are averaged
/// with equal weight. Throws EnumerationCapExceeded when
/// 2^measurements * |phi_grid| * |xi_grid| > kEnumerationCap.
OracleResult exact_oracle(const SchemeConfig &cfg, std::span<const double> phi_grid,
                          std::span<const double> xi_grid);

/// sin^2[(N+1) d/2] / (2pi (N+1) sin^2(d/2)).
double fejer_kernel(int64_t n_q, double delta);

/// Largest |P(branch) (N_Q+1)/(2pi) - fejer_kernel(N_Q, err)| over all QPEA
/// branches of an exact_oracle run. Over a uniform reference the estimate
/// error has density equal to that scaled branch probability.
double qpea_kernel_linf(int K, std::span<const double> phi_grid, std::span<const double> xi_grid);

}  // namespace phaseest

#endif

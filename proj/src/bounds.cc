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

#include "phaseest/bounds.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "phaseest/circular.h"

namespace phaseest {

namespace {

const double kArcSq = (kTwoPi / 3.0) * (kTwoPi / 3.0);

BoundReport finish(double n, std::vector<BoundTerm> terms) {
    BoundReport r;
    r.n_resources = n;
    r.components = std::move(terms);
    for (const auto &t : r.components) {
        r.v_sum += t.value;
    }
    r.v_bound = std::min(r.v_sum, kMaxVariance);
    r.delta_phi_bound = std::sqrt(r.v_bound);
    return r;
}

}  // namespace

double f_of(int64_t n_s) {
    if (n_s < 1) {
        throw std::invalid_argument("f_of: N_S must be >= 1");
    }
    double n = static_cast<double>(n_s);
    return std::min(n, (32.0 / 3.0) * std::log(n));
}

double chernoff_tail(int64_t n_s, double eps) {
    if (n_s < 1 || eps < 0) {
        throw std::invalid_argument("chernoff_tail: need N_S >= 1 and eps >= 0");
    }
    return std::min(1.0, 2.0 * std::exp(-2.0 * static_cast<double>(n_s) * eps * eps));
}

BoundReport hybrid_variance_bound(int64_t n_q, int64_t n_s) {
    if (n_q < 1 || n_s < 1) {
        throw std::invalid_argument("hybrid_variance_bound: N_Q and N_S must be >= 1");
    }
    double f = f_of(n_s);
    double nq = static_cast<double>(n_q);
    double ns = static_cast<double>(n_s);
    return finish(nq + ns, {
                               {"standard_outlier", 16.0 * std::exp(-3.0 * f / 16.0)},
                               {"qpea_spread", (3.0 / nq) * std::sqrt(f / ns)},
                               {"qpea_core", 2.0 / (kPi * nq * nq)},
                           });
}

BoundReport nonadaptive_vmax(int K, const Schedule &schedule) {
    if (K < 0) {
        throw std::invalid_argument("nonadaptive_vmax: K must be >= 0");
    }
    double n = 0;
    for (int k = 0; k <= K; ++k) {
        double m = schedule(K, k);
        if (!(m > 0)) {
            throw std::invalid_argument("nonadaptive_vmax: schedule must be positive");
        }
        n += m * std::ldexp(1.0, k);
    }
    double coarse = 16.0 * std::exp(-3.0 * schedule(K, 0) / 16.0);
    double resolution = kArcSq * std::ldexp(1.0, -2 * K);
    double stages = 0;
    for (int k = 1; k <= K; ++k) {
        stages += std::ldexp(1.0, -2 * k) * std::exp(-3.0 * schedule(K, k) / 16.0);
    }
    stages *= 16.0 * kArcSq;
    return finish(n, {{"coarse_outlier", coarse}, {"resolution", resolution}, {"stage_outliers", stages}});
}

Schedule linear_schedule(double M_K, double mu) {
    return [M_K, mu](int K, int k) { return M_K + mu * static_cast<double>(K - k); };
}

Schedule proven_schedule(double M_K) {
    return linear_schedule(M_K, 16.0 * std::numbers::ln2);
}

double proven_vmax_ceiling(double M_K, int K) {
    return kArcSq * (1.0 + 32.0 * std::exp(-3.0 * M_K / 16.0)) * std::ldexp(1.0, -2 * K);
}

double proven_schedule_overhead(double M_K, int K) {
    BoundReport r = nonadaptive_vmax(K, proven_schedule(M_K));
    return std::sqrt(r.v_sum) * r.n_resources / kPi;
}

double heisenberg_limit(double n) {
    if (!(n >= 1)) {
        throw std::invalid_argument("heisenberg_limit: N must be >= 1");
    }
    return kPi / n;
}

double sql(double n) {
    if (!(n >= 1)) {
        throw std::invalid_argument("sql: N must be >= 1");
    }
    return 1.0 / std::sqrt(n);
}

}  // namespace phaseest

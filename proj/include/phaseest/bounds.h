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

#ifndef PHASEEST_BOUNDS_H
#define PHASEEST_BOUNDS_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace phaseest {

/// Variance can never exceed 4 since V = 4 <sin^2(err/2)>.
inline constexpr double kMaxVariance = 4.0;

struct BoundTerm {
    std::string label;
    double value = 0;
};

/// Closed-form variance bound with its additive terms.
struct BoundReport {
    /// Resource count the bound applies to (may be fractional for schedules
    /// with non-integer repetition counts; rounded for display).
    double n_resources = 0;
    /// Sum of the terms, unclamped.
    double v_sum = 0;
    /// min(v_sum, 4).
    double v_bound = 0;
    /// sqrt(v_bound).
    double delta_phi_bound = 0;
    std::vector<BoundTerm> components;
};

/// Repetitions M(K, k) as a real number; the proven schedule uses mu = 16 ln 2.
using Schedule = std::function<double(int K, int k)>;

/// f(N_S) = min(N_S, (32/3) ln N_S).
double f_of(int64_t n_s);

/// Two-sided tail bound on an empirical frequency, min(1, 2 exp(-2 N eps^2)).
double chernoff_tail(int64_t n_s, double eps);

/// Combiner-based hybrid bound: terms 16 e^{-3f/16}, (3/N_Q) sqrt(f/N_S) and
/// 2/(pi N_Q^2).
BoundReport hybrid_variance_bound(int64_t n_q, int64_t n_s);

/// V_max for a non-adaptive schedule:
///   16 e^{-3M(K,0)/16} + (2pi/3)^2 2^{-2K} + 16 (2pi/3)^2 sum_{k=1}^K 2^{-2k} e^{-3M(K,k)/16}.
BoundReport nonadaptive_vmax(int K, const Schedule &schedule);

/// M_K + mu (K - k).
Schedule linear_schedule(double M_K, double mu);

/// The schedule with mu = 16 ln 2.
Schedule proven_schedule(double M_K);

/// Right-hand side (2pi/3)^2 (1 + 32 e^{-3 M_K/16}) 2^{-2K} of the closed-form
/// bound that V_max obeys under the proven schedule.
double proven_vmax_ceiling(double M_K, int K);

/// sqrt(V_max) * N / pi for the proven schedule, N = sum_k M(K,k) 2^k.
double proven_schedule_overhead(double M_K, int K);

/// pi / N.
double heisenberg_limit(double n);

/// 1 / sqrt(N).
double sql(double n);

}  // namespace phaseest

#endif

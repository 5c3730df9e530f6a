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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "phaseest/bounds.h"
#include "phaseest/harness.h"
#include "report.h"

#ifndef PHASEEST_VERSION
#define PHASEEST_VERSION "0.0.0"
#endif

namespace phaseest::cli {

namespace {

using nlohmann::json;

// Raised for argument combinations CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string iso_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream ss;
    ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return ss.str();
}

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Output goes to the named file when one is given, else to the fallback stream.
class Sink {
   public:
    Sink(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw std::runtime_error("cannot open output file '" + path + "'");
            }
            stream_ = &file_;
        }
    }
    std::ostream &get() {
        return *stream_;
    }

   private:
    std::ofstream file_;
    std::ostream *stream_;
};

struct SimulateArgs {
    std::string scheme;
    int k_min = 0;
    int k_max = 5;
    int mk = 2;
    int mu = 3;
    int64_t ns = 0;
    int64_t trials = 10000;
    uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
    std::string phi_policy = "uniform";
    double phi = 0;
    std::string hybrid_mode = "bayesian";
    std::string theta_policy = "increment";
    bool randomize_reference = false;
    unsigned threads = 0;
    std::string manifest;
};

struct BoundsArgs {
    std::string which;
    std::vector<double> n{100};
    int k_min = -1;
    int k_max = 10;
    double mk = 2;
    double mk_max = -1;
    double mu = 3;
    int k = 25;
    int64_t nq = 0;
    int64_t ns = 0;
    std::string out;
};

struct OracleArgs {
    std::string scheme;
    int k_max = 3;
    int mk = 1;
    int mu = 0;
    int64_t ns = 0;
    int64_t trials = 100000;
    uint64_t seed = 1;
    size_t phi_points = 0;
    size_t xi_points = 256;
    size_t kernel_phi_points = 4;
};

SchemeConfig base_config(const std::string &scheme, int K, int mk, int mu, int64_t ns) {
    SchemeConfig cfg;
    cfg.kind = *parse_scheme_kind(scheme);
    cfg.K = K;
    cfg.M_K = mk;
    cfg.mu = cfg.kind == SchemeKind::FixedM ? 0 : mu;
    if (cfg.kind == SchemeKind::Standard) {
        cfg.N_S = ns > 0 ? ns : (int64_t{1} << (K + 1));
    } else if (cfg.kind == SchemeKind::Hybrid) {
        cfg.N_S = ns;
    }
    return cfg;
}

std::vector<SchemeConfig> simulate_configs(const SimulateArgs &a) {
    if (a.k_min > a.k_max) {
        throw UsageError("--k-min must not exceed --k-max");
    }
    std::vector<SchemeConfig> cfgs;
    int k_lo = a.scheme == "hybrid" ? std::max(1, a.k_min) : a.k_min;
    for (int K = k_lo; K <= a.k_max; ++K) {
        SchemeConfig cfg = base_config(a.scheme, K, a.mk, a.mu, a.ns);
        cfg.theta_policy = a.theta_policy == "alternate" ? ThetaPolicy::Alternate0HalfPi : ThetaPolicy::IncrementPerBlock;
        cfg.randomize_reference = a.randomize_reference;
        if (cfg.kind == SchemeKind::Hybrid && a.hybrid_mode == "combiner") {
            cfg.hybrid_mode = HybridMode::ProofCombiner;
            cfg.theta_policy = ThetaPolicy::Alternate0HalfPi;
            cfg.randomize_reference = true;
        }
        try {
            cfg.validate();
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        cfgs.push_back(cfg);
    }
    if (cfgs.empty()) {
        throw UsageError("no K values to run");
    }
    return cfgs;
}

int cmd_simulate(const SimulateArgs &a, const std::vector<std::string> &argv, std::ostream &out, std::ostream &err) {
    auto cfgs = simulate_configs(a);
    CampaignOptions opts;
    opts.trials = a.trials;
    opts.seed = a.seed;
    opts.phi_policy = *parse_phi_policy(a.phi_policy);
    opts.fixed_phi = a.phi;
    opts.threads = a.threads;

    std::string started = iso_now();
    CampaignSummary summary = run_campaign(cfgs, opts);

    std::string manifest = a.manifest;
    if (manifest.empty() && !a.out.empty()) {
        manifest = a.out + ".manifest.json";
    }
    {
        Sink sink(a.out, out);
        if (a.format == "json") {
            sink.get() << report::campaign_json(summary, manifest).dump(2) << "\n";
        } else {
            report::write_campaign_csv(sink.get(), summary, manifest);
        }
    }
    if (!manifest.empty()) {
        json m = {
            {"tool", "phaseest"},
            {"version", PHASEEST_VERSION},
            {"command", "simulate"},
            {"argv", argv},
            {"config",
             {{"scheme", a.scheme},
              {"k_min", a.k_min},
              {"k_max", a.k_max},
              {"mk", a.mk},
              {"mu", a.mu},
              {"ns", a.ns},
              {"trials", a.trials},
              {"format", a.format},
              {"phi_policy", a.phi_policy},
              {"phi", a.phi},
              {"hybrid_mode", a.hybrid_mode},
              {"theta_policy", a.theta_policy},
              {"randomize_reference", a.randomize_reference}}},
            {"seed", a.seed},
            {"started", started},
            {"finished", iso_now()},
            {"outputs", a.out.empty() ? json::array() : json::array({a.out})},
        };
        std::ofstream mf(manifest);
        if (!mf) {
            throw std::runtime_error("cannot write manifest '" + manifest + "'");
        }
        mf << m.dump(2) << "\n";
    }

    int code = kExitOk;
    for (const auto &r : summary.rows) {
        if (!r.error.empty()) {
            err << "phaseest: K=" << r.cfg.K << ": " << r.error << "\n";
            code = kExitRuntime;
        }
    }
    return code;
}

void bound_cells(std::ostream &os, const BoundReport &b) {
    for (const auto &t : b.components) {
        os << ',' << report::format_number(t.value);
    }
    os << ',' << report::format_number(b.v_sum) << ',' << report::format_number(b.v_bound) << ','
       << report::format_number(b.delta_phi_bound) << "\n";
}

int cmd_bounds(const BoundsArgs &a, std::ostream &out) {
    Sink sink(a.out, out);
    std::ostream &os = sink.get();
    if (a.which == "limits") {
        os << "N,heisenberg,sql\n";
        for (double n : a.n) {
            os << report::format_number(n) << ',' << report::format_number(heisenberg_limit(n)) << ','
               << report::format_number(sql(n)) << "\n";
        }
    } else if (a.which == "hybrid") {
        os << "K,N_Q,N_S,N,f,standard_outlier,qpea_spread,qpea_core,v_sum,v_bound,delta_phi_bound\n";
        if (a.nq > 0 || a.ns > 0) {
            if (a.nq < 1 || a.ns < 1) {
                throw UsageError("--nq and --ns must be given together");
            }
            auto b = hybrid_variance_bound(a.nq, a.ns);
            os << ',' << a.nq << ',' << a.ns << ',' << a.nq + a.ns << ',' << report::format_number(f_of(a.ns));
            bound_cells(os, b);
        } else {
            int k_lo = a.k_min < 0 ? 1 : a.k_min;
            if (k_lo < 1 || k_lo > a.k_max) {
                throw UsageError("hybrid bounds need 1 <= --k-min <= --k-max");
            }
            for (int K = k_lo; K <= a.k_max; ++K) {
                int64_t nq = (int64_t{1} << (K + 1)) - 1;
                int64_t ns = int64_t{1} << K;
                auto b = hybrid_variance_bound(nq, ns);
                os << K << ',' << nq << ',' << ns << ',' << nq + ns << ',' << report::format_number(f_of(ns));
                bound_cells(os, b);
            }
        }
    } else if (a.which == "vmax") {
        int k_lo = a.k_min < 0 ? 0 : a.k_min;
        if (k_lo > a.k_max) {
            throw UsageError("--k-min must not exceed --k-max");
        }
        if (!(a.mk > 0) || a.mu < 0) {
            throw UsageError("vmax needs --mk > 0 and --mu >= 0");
        }
        os << "K,N,coarse_outlier,resolution,stage_outliers,v_sum,v_bound,delta_phi_bound\n";
        for (int K = k_lo; K <= a.k_max; ++K) {
            auto b = nonadaptive_vmax(K, linear_schedule(a.mk, a.mu));
            os << K << ',' << report::format_number(b.n_resources);
            bound_cells(os, b);
        }
    } else {
        double hi = a.mk_max < 0 ? a.mk : a.mk_max;
        if (!(a.mk > 0) || hi < a.mk) {
            throw UsageError("proven needs --mk > 0 and --mk-max >= --mk");
        }
        os << "M_K,K,N,v_max,ceiling,ceiling_holds,overhead\n";
        for (double mk = a.mk; mk <= hi + 1e-9; mk += 1.0) {
            auto b = nonadaptive_vmax(a.k, proven_schedule(mk));
            double ceiling = proven_vmax_ceiling(mk, a.k);
            os << report::format_number(mk) << ',' << a.k << ',' << report::format_number(b.n_resources) << ','
               << report::format_number(b.v_sum) << ',' << report::format_number(ceiling) << ','
               << (b.v_sum <= ceiling * (1 + 1e-12) ? 1 : 0) << ','
               << report::format_number(proven_schedule_overhead(mk, a.k)) << "\n";
        }
    }
    return kExitOk;
}

size_t exact_phi_points(int64_t n_resources) {
    // Integrand is a trigonometric polynomial of degree <= N + 1; the midpoint
    // rule on more points than that is exact.
    size_t g = 64;
    while (static_cast<int64_t>(g) < n_resources + 2) {
        g *= 2;
    }
    return g;
}

int cmd_oracle(const OracleArgs &a, std::ostream &out) {
    SchemeConfig cfg = base_config(a.scheme, a.k_max, a.mk, a.mu, a.ns);
    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    const int64_t n = total_resources(cfg);
    const int64_t meas = measurement_count(cfg);
    const size_t g = a.phi_points ? a.phi_points : exact_phi_points(n);
    auto phi_grid = phase_grid(g, true);
    double zero[1] = {0.0};

    bool ok = true;
    out << "scheme: " << to_string(cfg.kind) << "\nK: " << cfg.K << "\nN: " << n << "\nmeasurements: " << meas
        << "\n";

    double kernel_err = 0;
    if (cfg.kind == SchemeKind::QPEA) {
        auto kphi = phase_grid(a.kernel_phi_points, true);
        auto xi = phase_grid(a.xi_points);
        kernel_err = qpea_kernel_linf(cfg.K, kphi, xi);
    }
    OracleResult exact = exact_oracle(cfg, phi_grid, zero);

    CampaignOptions opts;
    opts.trials = a.trials;
    opts.seed = a.seed;
    HolevoStats mc = holevo_stats(run_trials(cfg, opts, 0));

    double z_sine = std::abs(mc.v_sine - exact.v_sine) / mc.v_sine_stderr;
    bool sine_ok = std::abs(mc.v_sine - exact.v_sine) <= 4.0 * mc.v_sine_stderr;
    ok = ok && sine_ok;
    out << "exact_v: " << report::format_number(exact.v_sine) << "\n"
        << "mc_v: " << report::format_number(mc.v_sine) << " +- " << report::format_number(mc.v_sine_stderr)
        << " (" << a.trials << " trials, " << report::format_number(z_sine) << " sigma)\n"
        << "check v_agreement_4sigma: " << (sine_ok ? "PASS" : "FAIL") << "\n";

    bool vh_ok = std::abs(mc.v_holevo - exact.v_holevo) <= 4.0 * mc.v_holevo_stderr;
    ok = ok && vh_ok;
    out << "exact_v_holevo: " << report::format_number(exact.v_holevo) << "\n"
        << "mc_v_holevo: " << report::format_number(mc.v_holevo) << " +- "
        << report::format_number(mc.v_holevo_stderr) << "\n"
        << "check v_holevo_agreement_4sigma: " << (vh_ok ? "PASS" : "FAIL") << "\n";

    if (cfg.kind == SchemeKind::QPEA) {
        bool k_ok = kernel_err < 1e-6;
        ok = ok && k_ok;
        out << "kernel_linf: " << report::format_number(kernel_err) << "\n"
            << "check fejer_kernel_1e-6: " << (k_ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::vector<std::string> expand_config(const std::vector<std::string> &args) {
    std::vector<std::string> rest;
    std::string path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) {
                throw UsageError("--config needs a file name");
            }
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (path.empty()) {
        return rest;
    }
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read config file '" + path + "'");
    }
    std::vector<std::string> injected;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value == "true") {
            injected.push_back("--" + key);
        } else if (value != "false") {
            injected.push_back("--" + key);
            injected.push_back(value);
        }
    }
    if (rest.empty()) {
        return injected;
    }
    std::vector<std::string> out{rest[0]};
    out.insert(out.end(), injected.begin(), injected.end());
    out.insert(out.end(), rest.begin() + 1, rest.end());
    return out;
}

int run(const std::vector<std::string> &raw_args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulate and evaluate multipass phase estimation schemes.", "phaseest"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", PHASEEST_VERSION);

    const std::vector<std::string> schemes{"standard", "qpea", "hybrid", "nonadaptive", "fixedm"};

    SimulateArgs sa;
    auto *sim = app.add_subcommand("simulate", "Run a Monte Carlo campaign, one row per K.");
    sim->add_option("--scheme", sa.scheme, "Protocol to simulate")->required()->check(CLI::IsMember(schemes));
    sim->add_option("--k-min", sa.k_min, "Smallest K (hybrid starts at 1)")->check(CLI::Range(0, 30));
    sim->add_option("--k-max", sa.k_max, "Largest K")->check(CLI::Range(0, 30));
    sim->add_option("--mk,--m", sa.mk, "M_K (fixedm: M)")->check(CLI::Range(1, 1000000));
    sim->add_option("--mu", sa.mu, "Repetition slope mu")->check(CLI::Range(0, 1000000));
    sim->add_option("--ns", sa.ns, "Standard-measurement budget N_S")->check(CLI::Range(int64_t{0}, int64_t{1} << 40));
    sim->add_option("--trials", sa.trials, "Trials per K")->check(CLI::Range(int64_t{1}, int64_t{1} << 40));
    sim->add_option("--seed", sa.seed, "Campaign seed");
    sim->add_option("--out", sa.out, "Output file (default: standard output)");
    sim->add_option("--format", sa.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sim->add_option("--phi-policy", sa.phi_policy, "uniform or fixed")->check(CLI::IsMember({"uniform", "fixed"}));
    sim->add_option("--phi", sa.phi, "True phase for --phi-policy fixed");
    sim->add_option("--hybrid-mode", sa.hybrid_mode, "bayesian or combiner")
        ->check(CLI::IsMember({"bayesian", "combiner"}));
    sim->add_option("--theta-policy", sa.theta_policy, "increment or alternate")
        ->check(CLI::IsMember({"increment", "alternate"}));
    sim->add_flag("--randomize-reference", sa.randomize_reference, "Draw a random reference phase per trial");
    sim->add_option("--threads", sa.threads, "Worker threads (default: PHASEEST_THREADS or all cores)");
    sim->add_option("--manifest", sa.manifest, "Manifest path (default: <out>.manifest.json)");

    BoundsArgs ba;
    auto *bnd = app.add_subcommand("bounds", "Tabulate analytic variance bounds and reference limits.");
    bnd->add_option("--which", ba.which, "hybrid, vmax, proven or limits")
        ->required()
        ->check(CLI::IsMember({"hybrid", "vmax", "proven", "limits"}));
    bnd->add_option("--n", ba.n, "Resource counts for --which limits")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->check(CLI::Range(1.0, 1e300));
    bnd->add_option("--k-min", ba.k_min, "Smallest K")->check(CLI::Range(0, 60));
    bnd->add_option("--k-max", ba.k_max, "Largest K")->check(CLI::Range(0, 60));
    bnd->add_option("--mk", ba.mk, "M_K");
    bnd->add_option("--mk-max", ba.mk_max, "Sweep M_K up to this value (proven)");
    bnd->add_option("--mu", ba.mu, "Repetition slope mu (vmax)");
    bnd->add_option("--k", ba.k, "K for --which proven")->check(CLI::Range(0, 60));
    bnd->add_option("--nq", ba.nq, "Explicit N_Q (hybrid)");
    bnd->add_option("--ns", ba.ns, "Explicit N_S (hybrid)");
    bnd->add_option("--out", ba.out, "Output file (default: standard output)");

    OracleArgs oa;
    auto *orc = app.add_subcommand("oracle", "Compare Monte Carlo against exhaustive enumeration.");
    orc->add_option("--scheme", oa.scheme, "Protocol")->required()->check(CLI::IsMember(schemes));
    orc->add_option("--k-max", oa.k_max, "K of the instance")->check(CLI::Range(0, 30));
    orc->add_option("--mk,--m", oa.mk, "M_K (fixedm: M)")->check(CLI::Range(1, 1000000));
    orc->add_option("--mu", oa.mu, "Repetition slope mu")->check(CLI::Range(0, 1000000));
    orc->add_option("--ns", oa.ns, "Standard-measurement budget N_S")->check(CLI::Range(int64_t{0}, int64_t{1} << 40));
    orc->add_option("--trials", oa.trials, "Monte Carlo trials")->check(CLI::Range(int64_t{2}, int64_t{1} << 40));
    orc->add_option("--seed", oa.seed, "Monte Carlo seed");
    orc->add_option("--phi-points", oa.phi_points, "Phase grid for the exact variance (default: exact size)");
    orc->add_option("--xi-points", oa.xi_points, "Reference grid for the kernel check")->check(CLI::Range(1, 1 << 20));

    std::string manifest_path;
    auto *rep = app.add_subcommand("replay", "Re-run the command recorded in a manifest.");
    rep->add_option("--manifest", manifest_path, "Manifest written by simulate")->required();

    std::vector<std::string> args;
    try {
        args = expand_config(raw_args);
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << PHASEEST_VERSION << "\n";
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "phaseest: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "phaseest: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (sim->parsed()) {
            return cmd_simulate(sa, args, out, err);
        }
        if (bnd->parsed()) {
            return cmd_bounds(ba, out);
        }
        if (orc->parsed()) {
            return cmd_oracle(oa, out);
        }
        if (rep->parsed()) {
            std::ifstream in(manifest_path);
            if (!in) {
                throw std::runtime_error("cannot read manifest '" + manifest_path + "'");
            }
            json m = json::parse(in);
            return run(m.at("argv").get<std::vector<std::string>>(), out, err);
        }
    } catch (const UsageError &e) {
        err << "phaseest: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EnumerationCapExceeded &e) {
        err << "phaseest: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception &e) {
        err << "phaseest: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace phaseest::cli

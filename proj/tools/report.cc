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

#include "report.h"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace phaseest::report {

namespace {

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

double parse_number(const std::string &s) {
    if (s == "inf") {
        return INFINITY;
    }
    if (s == "-inf") {
        return -INFINITY;
    }
    if (s == "nan") {
        return NAN;
    }
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) {
        throw std::runtime_error("bad number '" + s + "'");
    }
    return v;
}

nlohmann::json finite_or_null(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    return nullptr;
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_campaign_csv(std::ostream &out, const CampaignSummary &summary, std::string_view manifest) {
    if (!manifest.empty()) {
        out << "# manifest: " << manifest << "\n";
    }
    out << kCampaignColumns << "\n";
    for (const auto &r : summary.rows) {
        out << to_string(r.cfg.kind) << ',' << r.cfg.K << ',' << r.N << ',' << r.trials << ','
            << format_number(r.holevo_std) << ',' << format_number(r.std_x_sqrtN) << ','
            << format_number(r.std_x_N) << ',' << format_number(r.mc_stderr) << ',' << format_number(r.sql)
            << ',' << format_number(r.heisenberg) << ',' << (r.bound ? format_number(r.bound->v_bound) : "")
            << ',' << r.degenerate_count << "\n";
    }
}

nlohmann::json campaign_json(const CampaignSummary &summary, std::string_view manifest) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &r : summary.rows) {
        nlohmann::json row = {
            {"scheme", to_string(r.cfg.kind)},
            {"K", r.cfg.K},
            {"M_K", r.cfg.M_K},
            {"mu", r.cfg.mu},
            {"N_S", r.cfg.standard_budget()},
            {"N", r.N},
            {"trials", r.trials},
            {"holevo_std", finite_or_null(r.holevo_std)},
            {"std_x_sqrtN", finite_or_null(r.std_x_sqrtN)},
            {"std_x_N", finite_or_null(r.std_x_N)},
            {"mc_stderr", finite_or_null(r.mc_stderr)},
            {"v_holevo", finite_or_null(r.v_holevo)},
            {"v_holevo_stderr", finite_or_null(r.v_holevo_stderr)},
            {"v_sine", finite_or_null(r.v_sine)},
            {"v_sine_stderr", finite_or_null(r.v_sine_stderr)},
            {"sql", finite_or_null(r.sql)},
            {"heisenberg", finite_or_null(r.heisenberg)},
            {"degenerate_count", r.degenerate_count},
        };
        if (r.bound) {
            nlohmann::json terms = nlohmann::json::object();
            for (const auto &t : r.bound->components) {
                terms[t.label] = t.value;
            }
            row["bound"] = {{"v_bound", r.bound->v_bound}, {"v_sum", r.bound->v_sum}, {"terms", terms}};
        } else {
            row["bound"] = nullptr;
        }
        if (!r.error.empty()) {
            row["error"] = r.error;
        }
        rows.push_back(std::move(row));
    }
    nlohmann::json doc = {{"columns", kCampaignColumns}, {"rows", rows}};
    if (!manifest.empty()) {
        doc["manifest"] = manifest;
    }
    return doc;
}

std::vector<CsvRow> parse_campaign_csv(std::istream &in) {
    std::string line;
    bool header = false;
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!header) {
            if (line != kCampaignColumns) {
                throw std::runtime_error("parse_campaign_csv: unexpected header '" + line + "'");
            }
            header = true;
            continue;
        }
        auto cells = split(line);
        if (cells.size() != 12) {
            throw std::runtime_error("parse_campaign_csv: expected 12 cells, got " + std::to_string(cells.size()));
        }
        CsvRow r;
        r.scheme = cells[0];
        r.K = std::stoi(cells[1]);
        r.N = std::stoll(cells[2]);
        r.trials = std::stoll(cells[3]);
        r.holevo_std = parse_number(cells[4]);
        r.std_x_sqrtN = parse_number(cells[5]);
        r.std_x_N = parse_number(cells[6]);
        r.mc_stderr = parse_number(cells[7]);
        r.sql = parse_number(cells[8]);
        r.heisenberg = parse_number(cells[9]);
        if (!cells[10].empty()) {
            r.bound = parse_number(cells[10]);
        }
        r.degenerate_count = std::stoll(cells[11]);
        rows.push_back(std::move(r));
    }
    if (!header) {
        throw std::runtime_error("parse_campaign_csv: missing header");
    }
    return rows;
}

}  // namespace phaseest::report

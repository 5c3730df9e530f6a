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

#ifndef PHASEEST_TOOLS_REPORT_H
#define PHASEEST_TOOLS_REPORT_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "phaseest/harness.h"

namespace phaseest::report {

/// Column order of the campaign CSV.
inline constexpr std::string_view kCampaignColumns =
    "scheme,K,N,trials,holevo_std,std_x_sqrtN,std_x_N,mc_stderr,sql,heisenberg,bound,degenerate_count";

/// %.12g, with "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double v);

/// Writes the header and one line per row. Lines starting with '#' are
/// comments; when `manifest` is non-empty the first line names it.
void write_campaign_csv(std::ostream &out, const CampaignSummary &summary, std::string_view manifest = {});

nlohmann::json campaign_json(const CampaignSummary &summary, std::string_view manifest = {});

/// One parsed line of the campaign CSV.
struct CsvRow {
    std::string scheme;
    int K = 0;
    int64_t N = 0;
    int64_t trials = 0;
    double holevo_std = 0;
    double std_x_sqrtN = 0;
    double std_x_N = 0;
    double mc_stderr = 0;
    double sql = 0;
    double heisenberg = 0;
    std::optional<double> bound;
    int64_t degenerate_count = 0;
};

/// Parses what write_campaign_csv produced. Throws std::runtime_error on a
/// malformed header or line.
std::vector<CsvRow> parse_campaign_csv(std::istream &in);

}  // namespace phaseest::report

#endif

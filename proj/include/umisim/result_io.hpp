// SPDX-License-Identifier: Apache-2.0
//
// umisim - sub-THz urban microcell coverage simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "umisim/config.hpp"
#include "umisim/simulation.hpp"
#include "umisim/stats.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace umisim
{

inline constexpr const char* kUeCsvFile = "ues.csv";
inline constexpr const char* kSummaryFile = "summary.json";
inline constexpr const char* kConfigFile = "config.json";

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);
double parse_double(const std::string& s);

/// Per-UE CSV header, columns in emission order.
const std::vector<std::string>& ue_csv_columns();

void write_ue_csv(std::ostream& out, std::span<const UeOutcome> downlink, std::span<const UeOutcome> uplink);

/// Parses a per-UE CSV. Throws std::runtime_error naming line and column on
/// malformed input. Position z is not stored and comes back as 0.
std::vector<UeOutcome> read_ue_csv(std::istream& in);

nlohmann::json summary_to_json(const SeSummary& s);
SeSummary summary_from_json(const nlohmann::json& j);

/// {"seed": ..., "config": {...}, "summaries": [DL, UL]}
nlohmann::json make_summary_document(const ScenarioConfig& cfg, std::span<const SeSummary> summaries);

void write_map_csv(std::ostream& out, const CoverageMap& map);

/// Files produced by one CLI invocation.
struct RunArtifacts
{
    std::filesystem::path ue_csv;
    std::filesystem::path summary_json;
    std::vector<std::filesystem::path> map_csvs;
    std::filesystem::path config_echo;
};

/// Writes ues.csv, summary.json and config.json into `dir` (created if needed).
RunArtifacts write_run(const std::filesystem::path& dir, const ScenarioResult& result);

/// Writes map_<mode>.csv and config.json into `dir`.
RunArtifacts write_map(const std::filesystem::path& dir, const ScenarioConfig& cfg, const CoverageMap& map);

struct ReportResult
{
    std::vector<SeSummary> recomputed;
    std::vector<SeSummary> stored;
    bool matches = false;
};

/// Re-summarizes ues.csv in `dir` with the bandwidths from the stored config
/// echo and compares against summary.json field by field (exact equality).
ReportResult report_run(const std::filesystem::path& dir);

} // namespace umisim

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

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace umisim
{

enum class Direction
{
    Downlink,
    Uplink,
};

std::string to_string(Direction d);
Direction parse_direction(const std::string& s);

inline constexpr double kCoverageThresholdDb = 0.0;
inline constexpr double kOutageThresholdDb = -10.0;
inline constexpr double kEdgePercentile = 0.05;

/// Shannon bound log2(1 + SINR), optionally capped. Never negative.
double spectral_efficiency(double sinr_db, std::optional<double> cap_bps_hz = std::nullopt);

/// Percentile with linear interpolation between closest ranks, position
/// p * (n - 1) in the sorted sample. p in [0, 1].
double percentile(std::span<const double> values, double p);

struct SeSummary
{
    std::string scenario;
    Direction direction = Direction::Downlink;
    std::size_t ue_count = 0;
    double mean_se_bps_hz = 0.0;
    double median_se_bps_hz = 0.0;
    double edge_se_bps_hz = 0.0;      // 5th percentile
    double outage_fraction = 0.0;     // SINR below 0 dB (out of coverage)
    double deep_outage_fraction = 0.0;  // SINR below -10 dB
    double bandwidth_hz = 0.0;
    double mean_rate_bps = 0.0;
    double edge_rate_bps = 0.0;

    friend bool operator==(const SeSummary&, const SeSummary&) = default;
};

/// Summary over per-UE spectral efficiency and SINR samples taken in order.
/// Throws std::invalid_argument on empty or mismatched input.
SeSummary summarize(std::span<const double> se_bps_hz, std::span<const double> sinr_db, double bandwidth_hz,
                    std::string scenario, Direction direction);

struct Cdf
{
    std::vector<double> values;         // sorted ascending
    std::vector<double> probabilities;  // i / n for the i-th smallest, 1-based

    /// Empirical P(X <= x).
    double at(double x) const;
};

Cdf build_cdf(std::span<const double> values);

} // namespace umisim

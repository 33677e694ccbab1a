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

#include "umisim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace umisim
{

std::string to_string(Direction d)
{
    return d == Direction::Downlink ? "DL" : "UL";
}

Direction parse_direction(const std::string& s)
{
    if (s == "DL")
        return Direction::Downlink;
    if (s == "UL")
        return Direction::Uplink;
    throw std::invalid_argument("unknown direction '" + s + "'");
}

double spectral_efficiency(double sinr_db, std::optional<double> cap_bps_hz)
{
    // log1p keeps precision for deeply negative SINR
    double se = std::log1p(std::pow(10.0, sinr_db / 10.0)) / std::log(2.0);
    if (cap_bps_hz)
        se = std::min(se, *cap_bps_hz);
    return std::max(se, 0.0);
}

double percentile(std::span<const double> values, double p)
{
    if (values.empty())
        throw std::invalid_argument("percentile of an empty sample");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("percentile rank must be in [0, 1]");

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lower = static_cast<std::size_t>(std::floor(pos));
    const std::size_t upper = std::min(lower + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lower);
    return sorted[lower] + frac * (sorted[upper] - sorted[lower]);
}

SeSummary summarize(std::span<const double> se_bps_hz, std::span<const double> sinr_db, double bandwidth_hz,
                    std::string scenario, Direction direction)
{
    if (se_bps_hz.empty())
        throw std::invalid_argument("cannot summarize an empty outcome list");
    if (se_bps_hz.size() != sinr_db.size())
        throw std::invalid_argument("SE and SINR sample sizes differ");
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("bandwidth must be positive");

    SeSummary s;
    s.scenario = std::move(scenario);
    s.direction = direction;
    s.ue_count = se_bps_hz.size();

    double sum = 0.0;
    for (double v : se_bps_hz)
        sum += v;
    const auto n = static_cast<double>(se_bps_hz.size());
    s.mean_se_bps_hz = sum / n;
    s.median_se_bps_hz = percentile(se_bps_hz, 0.5);
    s.edge_se_bps_hz = percentile(se_bps_hz, kEdgePercentile);

    std::size_t uncovered = 0;
    std::size_t deep = 0;
    for (double v : sinr_db)
    {
        uncovered += v < kCoverageThresholdDb;
        deep += v < kOutageThresholdDb;
    }
    s.outage_fraction = static_cast<double>(uncovered) / n;
    s.deep_outage_fraction = static_cast<double>(deep) / n;

    s.bandwidth_hz = bandwidth_hz;
    s.mean_rate_bps = s.mean_se_bps_hz * bandwidth_hz;
    s.edge_rate_bps = s.edge_se_bps_hz * bandwidth_hz;
    return s;
}

double Cdf::at(double x) const
{
    const auto it = std::upper_bound(values.begin(), values.end(), x);
    return static_cast<double>(it - values.begin()) / static_cast<double>(values.size());
}

Cdf build_cdf(std::span<const double> values)
{
    if (values.empty())
        throw std::invalid_argument("cannot build a CDF from an empty sample");
    Cdf cdf;
    cdf.values.assign(values.begin(), values.end());
    std::sort(cdf.values.begin(), cdf.values.end());
    const auto n = static_cast<double>(cdf.values.size());
    cdf.probabilities.reserve(cdf.values.size());
    for (std::size_t i = 0; i < cdf.values.size(); ++i)
        cdf.probabilities.push_back(static_cast<double>(i + 1) / n);
    return cdf;
}

} // namespace umisim

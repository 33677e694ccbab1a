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

#include "umisim/channel_models.hpp"
#include "umisim/config.hpp"
#include "umisim/deployment.hpp"
#include "umisim/rng.hpp"
#include "umisim/stats.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace umisim
{

/// Row-major UE x BS matrix of link realizations for one carrier.
class LinkMatrix
{
  public:
    LinkMatrix() = default;
    LinkMatrix(std::size_t ue_count, std::size_t bs_count) : ues_(ue_count), bss_(bs_count), links_(ue_count * bs_count) {}

    std::size_t ue_count() const { return ues_; }
    std::size_t bs_count() const { return bss_; }

    LinkRealization& at(std::size_t ue, std::size_t bs) { return links_[ue * bss_ + bs]; }
    const LinkRealization& at(std::size_t ue, std::size_t bs) const { return links_[ue * bss_ + bs]; }

    std::span<const LinkRealization> row(std::size_t ue) const { return {links_.data() + ue * bss_, bss_}; }

  private:
    std::size_t ues_ = 0;
    std::size_t bss_ = 0;
    std::vector<LinkRealization> links_;
};

struct UeOutcome
{
    std::string scenario;
    Direction direction = Direction::Downlink;
    std::size_t drop = 0;
    std::size_t ue_index = 0;
    Position position;
    std::size_t serving_bs_index = 0;
    bool los_to_serving = false;
    double d2d_m = 0.0;
    double d3d_m = 0.0;
    double pl_db = 0.0;  // total path loss on the serving link
    double rx_power_dbm = 0.0;
    std::optional<double> interference_dbm;
    double noise_dbm = 0.0;
    double snr_db = 0.0;
    double sinr_db = 0.0;
    double se_bps_hz = 0.0;
    bool covered = false;  // SINR >= 0 dB
    bool outage = false;   // SINR < -10 dB

    friend bool operator==(const UeOutcome&, const UeOutcome&) = default;
};

/// Realizes every (UE, BS) link of a drop at carrier fc_ghz. LOS state and
/// shadowing come from per-link substreams, so two calls at different
/// carriers share them and differ only in the FSPL anchor. `threads` = 0
/// picks the hardware concurrency.
LinkMatrix realize_links(const CellLayout& layout, const UeDrop& drop, const ScenarioConfig& cfg,
                         const RngPolicy& rng, double fc_ghz, unsigned threads = 1);

/// Serving BS per UE under cfg.association. Max-power compares DL received
/// power (BS endpoint + UE gain - total path loss); ties go to the lowest index.
std::vector<std::size_t> associate(const LinkMatrix& links, const ScenarioConfig& cfg);

/// Per-cell UE scheduled for uplink transmission in this drop, used only
/// when UL interference is enabled. Empty cells get nullopt.
std::vector<std::optional<std::size_t>> schedule_uplink(std::span<const std::size_t> serving, std::size_t bs_count,
                                                        const RngPolicy& rng, std::size_t drop_index);

/// Direction-specific link budget for one UE. `links` must be realized at
/// the carrier of `direction`. `ul_scheduled` is consulted only for uplink
/// with interference enabled.
UeOutcome evaluate_ue(const LinkMatrix& links, std::span<const std::size_t> serving, std::size_t ue,
                      const UeDrop& drop, const ScenarioConfig& cfg, Direction direction,
                      std::span<const std::optional<std::size_t>> ul_scheduled = {});

/// Summary over outcomes of one direction; bandwidth from cfg.
SeSummary summarize(std::span<const UeOutcome> outcomes, double bandwidth_hz);

struct ScenarioResult
{
    ScenarioConfig config;
    std::vector<UeOutcome> downlink;  // ordered by (drop, ue_index)
    std::vector<UeOutcome> uplink;
    SeSummary downlink_summary;
    SeSummary uplink_summary;
};

/// Runs cfg.num_drops independent drops, both directions. Output is
/// identical for every thread count.
ScenarioResult run_scenario(const ScenarioConfig& cfg, unsigned threads = 1);

/// Layout for a configuration (kind, ring radius, BS height, coverage radius).
CellLayout layout_for(const ScenarioConfig& cfg);

// --- deterministic coverage maps ------------------------------------------

enum class MapMode
{
    Snr,
    Sinr,
};

std::string to_string(MapMode m);
MapMode parse_map_mode(const std::string& s);

/// DL SNR or SINR at one ground point using NLOS-best mean path loss to every
/// BS (no fading, no LOS draw); the strongest BS serves.
double map_point_db(const ScenarioConfig& cfg, const CellLayout& layout, double x_m, double y_m, MapMode mode);

struct CoverageMap
{
    MapMode mode = MapMode::Snr;
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> values_db;  // row-major, values_db[iy * xs.size() + ix]

    double at(std::size_t ix, std::size_t iy) const { return values_db[iy * xs.size() + ix]; }
};

/// Square grid over [-1.25 R, 1.25 R]^2 (R = coverage radius) with the
/// given step, points at -L + i * step.
CoverageMap coverage_map(const ScenarioConfig& cfg, double grid_step_m, MapMode mode);

} // namespace umisim

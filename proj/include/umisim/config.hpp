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
#include "umisim/deployment.hpp"
#include "umisim/link_budget.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace umisim
{

enum class AssociationPolicy
{
    MaxPower,
    Nearest,
};

std::string_view to_string(AssociationPolicy p);
AssociationPolicy parse_association_policy(std::string_view name);

/// Raised when a configuration value is invalid; field() names the offender.
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field))
    {
    }
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

struct ScenarioConfig
{
    std::string preset = "table1-single";
    LayoutKind layout = LayoutKind::Single;
    double ring_radius_m = 200.0;
    double coverage_radius_m = 200.0;
    std::size_t ue_count = 250;
    double min_drop_distance_m = 1.0;
    double bs_height_m = kBsHeightM;
    double ue_height_m = kUeHeightM;

    double dl_carrier_ghz = 142.0;
    double ul_carrier_ghz = 140.0;
    double dl_bandwidth_hz = 1e9;
    double ul_bandwidth_hz = 1e8;

    RadioEndpoint bs = kTable1Bs;
    RadioEndpoint ue = kTable1Ue;
    PathLossParams los_path_loss = kLosPathLoss;
    PathLossParams nlos_path_loss = kNlosBestPathLoss;
    LosModelParams los_model{};

    AssociationPolicy association = AssociationPolicy::MaxPower;
    double interferer_gain_discount_db = 0.0;
    bool ul_interference_enabled = false;
    double atmospheric_db_per_km = 0.0;
    std::optional<double> se_cap_bps_hz;

    std::uint64_t seed = 1;
    std::size_t num_drops = 1;

    /// Throws ConfigError naming the first invalid field.
    void validate() const;

    /// Label used in result files ("single" / "seven").
    std::string scenario_label() const { return std::string(to_string(layout)); }

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Baseline parameters for the named preset ("table1-single" or "table1-seven").
/// Throws ConfigError("preset", ...) for unknown names.
ScenarioConfig make_preset(std::string_view name);

/// Overlay a JSON object onto the preset it names (default table1-single).
/// Unknown keys and invalid values throw ConfigError naming the key.
ScenarioConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ScenarioConfig& cfg);

/// Read and validate a JSON config file.
ScenarioConfig load_config(const std::filesystem::path& path);

} // namespace umisim

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

#include "umisim/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>

namespace umisim
{

using nlohmann::json;

std::string_view to_string(AssociationPolicy p)
{
    return p == AssociationPolicy::MaxPower ? "max-power" : "nearest";
}

AssociationPolicy parse_association_policy(std::string_view name)
{
    if (name == "max-power")
        return AssociationPolicy::MaxPower;
    if (name == "nearest")
        return AssociationPolicy::Nearest;
    throw std::invalid_argument("expected max-power|nearest, got '" + std::string(name) + "'");
}

namespace
{

void require(bool ok, const char* field, const std::string& what)
{
    if (!ok)
        throw ConfigError(field, what);
}

void require_finite(double v, const char* field)
{
    require(std::isfinite(v), field, "must be finite");
}

template <typename T>
T get_as(const json& j, const std::string& field)
{
    try
    {
        return j.get<T>();
    }
    catch (const json::exception& e)
    {
        throw ConfigError(field, std::string("wrong type: ") + e.what());
    }
}

double get_number(const json& j, const std::string& field)
{
    if (!j.is_number())
        throw ConfigError(field, "expected a number");
    return j.get<double>();
}

std::size_t get_count(const json& j, const std::string& field)
{
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw ConfigError(field, "expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v <= 0)
        throw ConfigError(field, "must be positive");
    return static_cast<std::size_t>(v);
}

using Setter = std::function<void(ScenarioConfig&, const json&, const std::string&)>;

void apply_object(const json& j, const std::string& prefix, const std::map<std::string, Setter>& setters,
                  ScenarioConfig& cfg)
{
    if (!j.is_object())
        throw ConfigError(prefix.empty() ? "<root>" : prefix, "expected a JSON object");
    for (const auto& [key, value] : j.items())
    {
        const std::string field = prefix.empty() ? key : prefix + "." + key;
        const auto it = setters.find(key);
        if (it == setters.end())
            throw ConfigError(field, "unknown configuration key");
        it->second(cfg, value, field);
    }
}

template <typename Member>
Setter endpoint_setters(Member member)
{
    return [member](ScenarioConfig& cfg, const json& j, const std::string& prefix) {
        RadioEndpoint& ep = cfg.*member;
        apply_object(j, prefix,
                     {
                         {"tx_power_dbm", [&ep](ScenarioConfig&, const json& v, const std::string& f) {
                              ep.tx_power_dbm = get_number(v, f);
                          }},
                         {"antenna_gain_dbi", [&ep](ScenarioConfig&, const json& v, const std::string& f) {
                              ep.antenna_gain_dbi = get_number(v, f);
                          }},
                         {"noise_figure_db", [&ep](ScenarioConfig&, const json& v, const std::string& f) {
                              ep.noise_figure_db = get_number(v, f);
                          }},
                     },
                     cfg);
    };
}

template <typename Member>
Setter path_loss_setters(Member member)
{
    return [member](ScenarioConfig& cfg, const json& j, const std::string& prefix) {
        PathLossParams& pl = cfg.*member;
        apply_object(j, prefix,
                     {
                         {"ple", [&pl](ScenarioConfig&, const json& v, const std::string& f) {
                              pl.ple = get_number(v, f);
                          }},
                         {"shadow_sigma_db", [&pl](ScenarioConfig&, const json& v, const std::string& f) {
                              pl.shadow_sigma_db = get_number(v, f);
                          }},
                     },
                     cfg);
    };
}

const std::map<std::string, Setter>& root_setters()
{
    static const std::map<std::string, Setter> setters = {
        {"preset", [](ScenarioConfig&, const json&, const std::string&) {}},
        {"layout",
         [](ScenarioConfig& c, const json& v, const std::string& f) {
             try
             {
                 c.layout = parse_layout_kind(get_as<std::string>(v, f));
             }
             catch (const std::invalid_argument& e)
             {
                 throw ConfigError(f, e.what());
             }
         }},
        {"ring_radius_m", [](ScenarioConfig& c, const json& v, const std::string& f) { c.ring_radius_m = get_number(v, f); }},
        {"coverage_radius_m",
         [](ScenarioConfig& c, const json& v, const std::string& f) { c.coverage_radius_m = get_number(v, f); }},
        {"ue_count", [](ScenarioConfig& c, const json& v, const std::string& f) { c.ue_count = get_count(v, f); }},
        {"min_drop_distance_m",
         [](ScenarioConfig& c, const json& v, const std::string& f) { c.min_drop_distance_m = get_number(v, f); }},
        {"bs_height_m", [](ScenarioConfig& c, const json& v, const std::string& f) { c.bs_height_m = get_number(v, f); }},
        {"ue_height_m", [](ScenarioConfig& c, const json& v, const std::string& f) { c.ue_height_m = get_number(v, f); }},
        {"dl_carrier_ghz",
         [](ScenarioConfig& c, const json& v, const std::string& f) { c.dl_carrier_ghz = get_number(v, f); }},
        {"ul_carrier_ghz",
         [](ScenarioConfig& c, const json& v, const std::string& f) { c.ul_carrier_ghz = get_number(v, f); }},
        {"dl_bandwidth_hz",
         [](ScenarioConfig& c, const json& v, const std::string& f) { c.dl_bandwidth_hz = get_number(v, f); }},
        {"ul_bandwidth_hz",
         [](ScenarioConfig& c, const json& v, const std::string& f) { c.ul_bandwidth_hz = get_number(v, f); }},
        {"bs", endpoint_setters(&ScenarioConfig::bs)},
        {"ue", endpoint_setters(&ScenarioConfig::ue)},
        {"los_path_loss", path_loss_setters(&ScenarioConfig::los_path_loss)},
        {"nlos_path_loss", path_loss_setters(&ScenarioConfig::nlos_path_loss)},
        {"los_model",
         [](ScenarioConfig& c, const json& v, const std::string& prefix) {
             apply_object(v, prefix,
                          {
                              {"d1_m", [](ScenarioConfig& c2, const json& x, const std::string& f) {
                                   c2.los_model.d1_m = get_number(x, f);
                               }},
                              {"d2_m", [](ScenarioConfig& c2, const json& x, const std::string& f) {
                                   c2.los_model.d2_m = get_number(x, f);
                               }},
                          },
                          c);
         }},
        {"association",
         [](ScenarioConfig& c, const json& v, const std::string& f) {
             try
             {
                 c.association = parse_association_policy(get_as<std::string>(v, f));
             }
             catch (const std::invalid_argument& e)
             {
                 throw ConfigError(f, e.what());
             }
         }},
        {"interferer_gain_discount_db",
         [](ScenarioConfig& c, const json& v, const std::string& f) { c.interferer_gain_discount_db = get_number(v, f); }},
        {"ul_interference_enabled",
         [](ScenarioConfig& c, const json& v, const std::string& f) {
             if (!v.is_boolean())
                 throw ConfigError(f, "expected a boolean");
             c.ul_interference_enabled = v.get<bool>();
         }},
        {"atmospheric_db_per_km",
         [](ScenarioConfig& c, const json& v, const std::string& f) { c.atmospheric_db_per_km = get_number(v, f); }},
        {"se_cap_bps_hz",
         [](ScenarioConfig& c, const json& v, const std::string& f) {
             if (v.is_null())
                 c.se_cap_bps_hz.reset();
             else
                 c.se_cap_bps_hz = get_number(v, f);
         }},
        {"seed",
         [](ScenarioConfig& c, const json& v, const std::string& f) {
             if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
                 throw ConfigError(f, "expected a non-negative integer");
             c.seed = v.get<std::uint64_t>();
         }},
        {"num_drops", [](ScenarioConfig& c, const json& v, const std::string& f) { c.num_drops = get_count(v, f); }},
    };
    return setters;
}

} // namespace

void ScenarioConfig::validate() const
{
    require(layout != LayoutKind::Seven || ring_radius_m > 0.0, "ring_radius_m", "must be positive");
    require_finite(ring_radius_m, "ring_radius_m");
    require(coverage_radius_m > 0.0 && std::isfinite(coverage_radius_m), "coverage_radius_m", "must be positive");
    require(ue_count > 0, "ue_count", "must be positive");
    require(min_drop_distance_m >= 0.0 && min_drop_distance_m < coverage_radius_m, "min_drop_distance_m",
            "must be in [0, coverage_radius_m)");
    require(bs_height_m >= 0.0 && std::isfinite(bs_height_m), "bs_height_m", "must be non-negative");
    require(ue_height_m >= 0.0 && std::isfinite(ue_height_m), "ue_height_m", "must be non-negative");
    require(dl_carrier_ghz > 0.0 && std::isfinite(dl_carrier_ghz), "dl_carrier_ghz", "must be positive");
    require(ul_carrier_ghz > 0.0 && std::isfinite(ul_carrier_ghz), "ul_carrier_ghz", "must be positive");
    require(dl_bandwidth_hz > 0.0 && std::isfinite(dl_bandwidth_hz), "dl_bandwidth_hz", "must be positive");
    require(ul_bandwidth_hz > 0.0 && std::isfinite(ul_bandwidth_hz), "ul_bandwidth_hz", "must be positive");
    require_finite(bs.tx_power_dbm, "bs.tx_power_dbm");
    require_finite(bs.antenna_gain_dbi, "bs.antenna_gain_dbi");
    require(bs.noise_figure_db >= 0.0, "bs.noise_figure_db", "must be non-negative");
    require_finite(ue.tx_power_dbm, "ue.tx_power_dbm");
    require_finite(ue.antenna_gain_dbi, "ue.antenna_gain_dbi");
    require(ue.noise_figure_db >= 0.0, "ue.noise_figure_db", "must be non-negative");
    require(los_path_loss.ple > 0.0, "los_path_loss.ple", "must be positive");
    require(los_path_loss.shadow_sigma_db >= 0.0, "los_path_loss.shadow_sigma_db", "must be non-negative");
    require(nlos_path_loss.ple > 0.0, "nlos_path_loss.ple", "must be positive");
    require(nlos_path_loss.shadow_sigma_db >= 0.0, "nlos_path_loss.shadow_sigma_db", "must be non-negative");
    require(los_model.d1_m > 0.0, "los_model.d1_m", "must be positive");
    require(los_model.d2_m > 0.0, "los_model.d2_m", "must be positive");
    require_finite(interferer_gain_discount_db, "interferer_gain_discount_db");
    require(atmospheric_db_per_km >= 0.0 && std::isfinite(atmospheric_db_per_km), "atmospheric_db_per_km",
            "must be non-negative");
    require(!se_cap_bps_hz || *se_cap_bps_hz > 0.0, "se_cap_bps_hz", "must be positive when set");
    require(num_drops > 0, "num_drops", "must be positive");
}

ScenarioConfig make_preset(std::string_view name)
{
    ScenarioConfig cfg;
    if (name == "table1-single")
    {
        cfg.preset = "table1-single";
        cfg.layout = LayoutKind::Single;
        cfg.coverage_radius_m = 200.0;
        cfg.ue_count = 250;
    }
    else if (name == "table1-seven")
    {
        cfg.preset = "table1-seven";
        cfg.layout = LayoutKind::Seven;
        cfg.coverage_radius_m = 400.0;
        cfg.ue_count = 1000;
    }
    else
    {
        throw ConfigError("preset", "unknown preset '" + std::string(name) + "' (expected table1-single|table1-seven)");
    }
    return cfg;
}

ScenarioConfig config_from_json(const json& j)
{
    if (!j.is_object())
        throw ConfigError("<root>", "expected a JSON object");

    std::string preset = "table1-single";
    if (const auto it = j.find("preset"); it != j.end())
        preset = get_as<std::string>(*it, "preset");

    ScenarioConfig cfg = make_preset(preset);
    apply_object(j, "", root_setters(), cfg);
    cfg.validate();
    return cfg;
}

json config_to_json(const ScenarioConfig& cfg)
{
    auto endpoint = [](const RadioEndpoint& e) {
        return json{{"tx_power_dbm", e.tx_power_dbm},
                    {"antenna_gain_dbi", e.antenna_gain_dbi},
                    {"noise_figure_db", e.noise_figure_db}};
    };
    auto path_loss = [](const PathLossParams& p) {
        return json{{"ple", p.ple}, {"shadow_sigma_db", p.shadow_sigma_db}};
    };
    return json{
        {"preset", cfg.preset},
        {"layout", std::string(to_string(cfg.layout))},
        {"ring_radius_m", cfg.ring_radius_m},
        {"coverage_radius_m", cfg.coverage_radius_m},
        {"ue_count", cfg.ue_count},
        {"min_drop_distance_m", cfg.min_drop_distance_m},
        {"bs_height_m", cfg.bs_height_m},
        {"ue_height_m", cfg.ue_height_m},
        {"dl_carrier_ghz", cfg.dl_carrier_ghz},
        {"ul_carrier_ghz", cfg.ul_carrier_ghz},
        {"dl_bandwidth_hz", cfg.dl_bandwidth_hz},
        {"ul_bandwidth_hz", cfg.ul_bandwidth_hz},
        {"bs", endpoint(cfg.bs)},
        {"ue", endpoint(cfg.ue)},
        {"los_path_loss", path_loss(cfg.los_path_loss)},
        {"nlos_path_loss", path_loss(cfg.nlos_path_loss)},
        {"los_model", json{{"d1_m", cfg.los_model.d1_m}, {"d2_m", cfg.los_model.d2_m}}},
        {"association", std::string(to_string(cfg.association))},
        {"interferer_gain_discount_db", cfg.interferer_gain_discount_db},
        {"ul_interference_enabled", cfg.ul_interference_enabled},
        {"atmospheric_db_per_km", cfg.atmospheric_db_per_km},
        {"se_cap_bps_hz", cfg.se_cap_bps_hz ? json(*cfg.se_cap_bps_hz) : json(nullptr)},
        {"seed", cfg.seed},
        {"num_drops", cfg.num_drops},
    };
}

ScenarioConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path.string() + "'");
    json j;
    try
    {
        j = json::parse(in);
    }
    catch (const json::parse_error& e)
    {
        throw std::runtime_error("failed to parse '" + path.string() + "': " + e.what());
    }
    return config_from_json(j);
}

} // namespace umisim

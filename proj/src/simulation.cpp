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

#include "umisim/simulation.hpp"

#include "umisim/link_budget.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace umisim
{

namespace
{

unsigned resolve_threads(unsigned threads)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    return threads;
}

// Static partition of [0, n) over worker threads. Each index is written by
// exactly one worker, so results never depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn)
{
    threads = resolve_threads(threads);
    if (threads == 1 || n < 2)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }

    const std::size_t workers = std::min<std::size_t>(threads, n);
    const std::size_t chunk = (n + workers - 1) / workers;
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
        {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            pool.emplace_back([&, begin, end] {
                try
                {
                    for (std::size_t i = begin; i < end; ++i)
                        fn(i);
                }
                catch (...)
                {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            });
        }
    }
    if (error)
        std::rethrow_exception(error);
}

const PathLossParams& params_for(const ScenarioConfig& cfg, bool los)
{
    return los ? cfg.los_path_loss : cfg.nlos_path_loss;
}

double dl_power_dbm(const ScenarioConfig& cfg, const LinkRealization& link)
{
    return received_power_dbm(cfg.bs, cfg.ue.antenna_gain_dbi, link.total_pl_db);
}

double ul_power_dbm(const ScenarioConfig& cfg, const LinkRealization& link)
{
    return received_power_dbm(cfg.ue, cfg.bs.antenna_gain_dbi, link.total_pl_db);
}

} // namespace

CellLayout layout_for(const ScenarioConfig& cfg)
{
    CellLayout layout = make_layout(cfg.layout, cfg.ring_radius_m, cfg.bs_height_m);
    layout.coverage_radius_m = cfg.coverage_radius_m;
    return layout;
}

LinkMatrix realize_links(const CellLayout& layout, const UeDrop& drop, const ScenarioConfig& cfg,
                         const RngPolicy& rng, double fc_ghz, unsigned threads)
{
    const std::size_t n_ue = drop.ue_positions.size();
    const std::size_t n_bs = layout.bs_positions.size();
    LinkMatrix links(n_ue, n_bs);

    parallel_for(n_ue, threads, [&](std::size_t ue) {
        for (std::size_t bs = 0; bs < n_bs; ++bs)
        {
            LinkRealization& link = links.at(ue, bs);
            const auto geo = link_geometry(layout.bs_positions[bs], drop.ue_positions[ue]);
            link.d2d_m = geo.d2d_m;
            link.d3d_m = geo.d3d_m;

            auto los_gen = rng.stream(drop.drop_index, ue, bs, StreamPurpose::LosState);
            link.los = sample_los_state(geo.d2d_m, cfg.los_model, los_gen);

            const PathLossParams& pl = params_for(cfg, link.los);
            auto shadow_gen = rng.stream(drop.drop_index, ue, bs, StreamPurpose::ShadowFading);
            link.shadow_db = sample_shadow_fading(pl, shadow_gen);

            link.mean_pl_db = ci_mean_path_loss(fc_ghz, geo.d3d_m, pl) +
                              atmospheric_loss_db(cfg.atmospheric_db_per_km, geo.d3d_m);
            link.total_pl_db = link.mean_pl_db + link.shadow_db;
        }
    });
    return links;
}

std::vector<std::size_t> associate(const LinkMatrix& links, const ScenarioConfig& cfg)
{
    if (links.bs_count() == 0)
        throw std::invalid_argument("association needs at least one BS");

    std::vector<std::size_t> serving(links.ue_count(), 0);
    for (std::size_t ue = 0; ue < links.ue_count(); ++ue)
    {
        const auto row = links.row(ue);
        std::size_t best = 0;
        for (std::size_t bs = 1; bs < row.size(); ++bs)
        {
            const bool better = cfg.association == AssociationPolicy::MaxPower
                                    ? dl_power_dbm(cfg, row[bs]) > dl_power_dbm(cfg, row[best])
                                    : row[bs].d2d_m < row[best].d2d_m;
            if (better)
                best = bs;
        }
        serving[ue] = best;
    }
    return serving;
}

std::vector<std::optional<std::size_t>> schedule_uplink(std::span<const std::size_t> serving, std::size_t bs_count,
                                                        const RngPolicy& rng, std::size_t drop_index)
{
    std::vector<std::vector<std::size_t>> members(bs_count);
    for (std::size_t ue = 0; ue < serving.size(); ++ue)
        members.at(serving[ue]).push_back(ue);

    std::vector<std::optional<std::size_t>> scheduled(bs_count);
    for (std::size_t bs = 0; bs < bs_count; ++bs)
    {
        if (members[bs].empty())
            continue;
        auto gen = rng.stream(drop_index, 0, bs, StreamPurpose::UlScheduling);
        std::uniform_int_distribution<std::size_t> pick(0, members[bs].size() - 1);
        scheduled[bs] = members[bs][pick(gen)];
    }
    return scheduled;
}

UeOutcome evaluate_ue(const LinkMatrix& links, std::span<const std::size_t> serving, std::size_t ue,
                      const UeDrop& drop, const ScenarioConfig& cfg, Direction direction,
                      std::span<const std::optional<std::size_t>> ul_scheduled)
{
    const std::size_t s = serving[ue];
    const LinkRealization& link = links.at(ue, s);

    std::vector<double> interferers;
    double signal = 0.0;
    double noise = 0.0;

    if (direction == Direction::Downlink)
    {
        signal = dl_power_dbm(cfg, link);
        noise = noise_power_dbm(cfg.dl_bandwidth_hz, cfg.ue.noise_figure_db);
        for (std::size_t bs = 0; bs < links.bs_count(); ++bs)
        {
            if (bs != s)
                interferers.push_back(dl_power_dbm(cfg, links.at(ue, bs)) - cfg.interferer_gain_discount_db);
        }
    }
    else
    {
        signal = ul_power_dbm(cfg, link);
        noise = noise_power_dbm(cfg.ul_bandwidth_hz, cfg.bs.noise_figure_db);
        if (cfg.ul_interference_enabled)
        {
            for (std::size_t bs = 0; bs < ul_scheduled.size(); ++bs)
            {
                if (bs == s || !ul_scheduled[bs])
                    continue;
                interferers.push_back(ul_power_dbm(cfg, links.at(*ul_scheduled[bs], s)) -
                                      cfg.interferer_gain_discount_db);
            }
        }
    }

    const LinkBudgetResult budget = evaluate_link_budget(signal, interferers, noise);

    UeOutcome out;
    out.scenario = cfg.scenario_label();
    out.direction = direction;
    out.drop = drop.drop_index;
    out.ue_index = ue;
    out.position = drop.ue_positions[ue];
    out.serving_bs_index = s;
    out.los_to_serving = link.los;
    out.d2d_m = link.d2d_m;
    out.d3d_m = link.d3d_m;
    out.pl_db = link.total_pl_db;
    out.rx_power_dbm = budget.rx_power_dbm;
    out.interference_dbm = budget.interference_dbm;
    out.noise_dbm = budget.noise_dbm;
    out.snr_db = budget.snr_db;
    out.sinr_db = budget.sinr_db;
    out.se_bps_hz = spectral_efficiency(budget.sinr_db, cfg.se_cap_bps_hz);
    out.covered = budget.sinr_db >= kCoverageThresholdDb;
    out.outage = budget.sinr_db < kOutageThresholdDb;
    return out;
}

SeSummary summarize(std::span<const UeOutcome> outcomes, double bandwidth_hz)
{
    if (outcomes.empty())
        throw std::invalid_argument("cannot summarize an empty outcome list");
    std::vector<double> se;
    std::vector<double> sinr;
    se.reserve(outcomes.size());
    sinr.reserve(outcomes.size());
    for (const auto& o : outcomes)
    {
        se.push_back(o.se_bps_hz);
        sinr.push_back(o.sinr_db);
    }
    return summarize(se, sinr, bandwidth_hz, outcomes.front().scenario, outcomes.front().direction);
}

ScenarioResult run_scenario(const ScenarioConfig& cfg, unsigned threads)
{
    cfg.validate();

    ScenarioResult result;
    result.config = cfg;

    const CellLayout layout = layout_for(cfg);
    const RngPolicy rng(cfg.seed);
    const DropOptions drop_opts{cfg.ue_count, cfg.coverage_radius_m, cfg.min_drop_distance_m, cfg.ue_height_m};

    result.downlink.resize(cfg.ue_count * cfg.num_drops);
    result.uplink.resize(cfg.ue_count * cfg.num_drops);

    for (std::size_t d = 0; d < cfg.num_drops; ++d)
    {
        const UeDrop drop = drop_ues(drop_opts, layout, rng, d);
        const LinkMatrix dl_links = realize_links(layout, drop, cfg, rng, cfg.dl_carrier_ghz, threads);
        const LinkMatrix ul_links = realize_links(layout, drop, cfg, rng, cfg.ul_carrier_ghz, threads);
        const auto serving = associate(dl_links, cfg);
        std::vector<std::optional<std::size_t>> scheduled;
        if (cfg.ul_interference_enabled)
            scheduled = schedule_uplink(serving, layout.bs_positions.size(), rng, d);

        const std::size_t base = d * cfg.ue_count;
        parallel_for(cfg.ue_count, threads, [&](std::size_t ue) {
            result.downlink[base + ue] = evaluate_ue(dl_links, serving, ue, drop, cfg, Direction::Downlink);
            result.uplink[base + ue] = evaluate_ue(ul_links, serving, ue, drop, cfg, Direction::Uplink, scheduled);
        });
    }

    result.downlink_summary = summarize(result.downlink, cfg.dl_bandwidth_hz);
    result.uplink_summary = summarize(result.uplink, cfg.ul_bandwidth_hz);
    return result;
}

std::string to_string(MapMode m)
{
    return m == MapMode::Snr ? "snr" : "sinr";
}

MapMode parse_map_mode(const std::string& s)
{
    if (s == "snr")
        return MapMode::Snr;
    if (s == "sinr")
        return MapMode::Sinr;
    throw std::invalid_argument("unknown map mode '" + s + "' (expected snr|sinr)");
}

double map_point_db(const ScenarioConfig& cfg, const CellLayout& layout, double x_m, double y_m, MapMode mode)
{
    const Position point{x_m, y_m, cfg.ue_height_m};
    std::vector<double> powers;
    powers.reserve(layout.bs_positions.size());
    for (const auto& bs : layout.bs_positions)
    {
        const auto geo = link_geometry(bs, point);
        // Clamp at the CI anchor so points under a BS stay defined.
        const double d3d = std::max(geo.d3d_m, cfg.nlos_path_loss.reference_distance_m);
        const double pl = ci_mean_path_loss(cfg.dl_carrier_ghz, d3d, cfg.nlos_path_loss) +
                          atmospheric_loss_db(cfg.atmospheric_db_per_km, d3d);
        powers.push_back(received_power_dbm(cfg.bs, cfg.ue.antenna_gain_dbi, pl));
    }

    const auto best = static_cast<std::size_t>(std::max_element(powers.begin(), powers.end()) - powers.begin());
    const double noise = noise_power_dbm(cfg.dl_bandwidth_hz, cfg.ue.noise_figure_db);
    if (mode == MapMode::Snr)
        return powers[best] - noise;

    std::vector<double> interferers;
    for (std::size_t i = 0; i < powers.size(); ++i)
    {
        if (i != best)
            interferers.push_back(powers[i] - cfg.interferer_gain_discount_db);
    }
    return evaluate_link_budget(powers[best], interferers, noise).sinr_db;
}

CoverageMap coverage_map(const ScenarioConfig& cfg, double grid_step_m, MapMode mode)
{
    if (!(grid_step_m > 0.0))
        throw std::invalid_argument("grid step must be positive");
    cfg.validate();

    const CellLayout layout = layout_for(cfg);
    const double half = 1.25 * cfg.coverage_radius_m;
    const auto points = static_cast<std::size_t>(std::floor(2.0 * half / grid_step_m + 1e-9)) + 1;

    CoverageMap map;
    map.mode = mode;
    map.xs.reserve(points);
    for (std::size_t i = 0; i < points; ++i)
        map.xs.push_back(-half + static_cast<double>(i) * grid_step_m);
    map.ys = map.xs;

    map.values_db.resize(points * points);
    for (std::size_t iy = 0; iy < points; ++iy)
    {
        for (std::size_t ix = 0; ix < points; ++ix)
            map.values_db[iy * points + ix] = map_point_db(cfg, layout, map.xs[ix], map.ys[iy], mode);
    }
    return map;
}

} // namespace umisim

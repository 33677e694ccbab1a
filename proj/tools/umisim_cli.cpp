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

// Command-line front end:
//   umisim run    --config <file> [--seed N] [--out <dir>] [--threads N]
//   umisim map    --config <file> --grid <m> --mode snr|sinr [--out <dir>]
//   umisim report --in <dir>
// UMISIM_OUT_DIR overrides the default output directory when --out is absent.

#include "umisim/config.hpp"
#include "umisim/result_io.hpp"
#include "umisim/simulation.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

namespace
{

std::filesystem::path resolve_out_dir(const std::string& flag_value)
{
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv("UMISIM_OUT_DIR"); env && *env)
        return env;
    return "umisim_out";
}

void print_summary(const umisim::SeSummary& s)
{
    std::cout << std::fixed << std::setprecision(3) << s.scenario << ' ' << umisim::to_string(s.direction)
              << ": n=" << s.ue_count << " mean=" << s.mean_se_bps_hz << " median=" << s.median_se_bps_hz
              << " edge=" << s.edge_se_bps_hz << " bps/Hz, uncovered=" << 100.0 * s.outage_fraction
              << "%, outage=" << 100.0 * s.deep_outage_fraction << "%, mean rate=" << s.mean_rate_bps / 1e6
              << " Mbps\n";
    std::cout.unsetf(std::ios::floatfield);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sub-THz urban microcell coverage and spectral efficiency simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    unsigned threads = 0;

    auto* run = app.add_subcommand("run", "Monte Carlo run, downlink and uplink");
    run->add_option("--config", config_path, "Scenario config JSON")->required()->check(CLI::ExistingFile);
    run->add_option("--seed", seed, "Override the master seed");
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    double grid_m = 0.0;
    std::string mode = "snr";
    auto* map = app.add_subcommand("map", "Deterministic DL coverage map (NLOS-best mean path loss)");
    map->add_option("--config", config_path, "Scenario config JSON")->required()->check(CLI::ExistingFile);
    map->add_option("--grid", grid_m, "Grid step in meters")->required()->check(CLI::PositiveNumber);
    map->add_option("--mode", mode, "snr or sinr")->check(CLI::IsMember({"snr", "sinr"}));
    map->add_option("--out", out_dir, "Output directory");

    std::string in_dir;
    auto* report = app.add_subcommand("report", "Recompute summaries from a run directory and verify them");
    report->add_option("--in", in_dir, "Run output directory")->required()->check(CLI::ExistingDirectory);

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (run->parsed())
        {
            auto cfg = umisim::load_config(config_path);
            if (seed)
                cfg.seed = *seed;
            const auto result = umisim::run_scenario(cfg, threads);
            const auto art = umisim::write_run(resolve_out_dir(out_dir), result);
            print_summary(result.downlink_summary);
            print_summary(result.uplink_summary);
            std::cout << "wrote " << art.ue_csv.string() << ", " << art.summary_json.string() << ", "
                      << art.config_echo.string() << '\n';
        }
        else if (map->parsed())
        {
            const auto cfg = umisim::load_config(config_path);
            const auto grid = umisim::coverage_map(cfg, grid_m, umisim::parse_map_mode(mode));
            const auto art = umisim::write_map(resolve_out_dir(out_dir), cfg, grid);
            std::cout << "wrote " << art.map_csvs.front().string() << " (" << grid.xs.size() << "x" << grid.ys.size()
                      << " points)\n";
        }
        else if (report->parsed())
        {
            const auto rep = umisim::report_run(in_dir);
            for (const auto& s : rep.recomputed)
                print_summary(s);
            if (!rep.matches)
            {
                std::cerr << "error: recomputed summary differs from " << umisim::kSummaryFile << '\n';
                return 2;
            }
            std::cout << "summary verified\n";
        }
    }
    catch (const umisim::ConfigError& e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

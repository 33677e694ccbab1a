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

#include "umisim/result_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace umisim
{

using nlohmann::json;

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc())
        throw std::runtime_error("failed to format double");
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s)
{
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

const std::vector<std::string>& ue_csv_columns()
{
    static const std::vector<std::string> cols = {
        "scenario", "direction",        "drop",      "ue_index", "x_m",    "y_m",       "serving_bs",
        "los",      "d2d_m",            "d3d_m",     "pl_db",    "rx_dbm", "interference_dbm",
        "noise_dbm", "snr_db",          "sinr_db",   "se_bps_hz", "covered", "outage"};
    return cols;
}

namespace
{

std::string flag(bool b) { return b ? "1" : "0"; }

void write_row(std::ostream& out, const UeOutcome& o)
{
    out << o.scenario << ',' << to_string(o.direction) << ',' << o.drop << ',' << o.ue_index << ','
        << format_double(o.position.x_m) << ',' << format_double(o.position.y_m) << ',' << o.serving_bs_index << ','
        << flag(o.los_to_serving) << ',' << format_double(o.d2d_m) << ',' << format_double(o.d3d_m) << ','
        << format_double(o.pl_db) << ',' << format_double(o.rx_power_dbm) << ','
        << (o.interference_dbm ? format_double(*o.interference_dbm) : std::string()) << ','
        << format_double(o.noise_dbm) << ',' << format_double(o.snr_db) << ',' << format_double(o.sinr_db) << ','
        << format_double(o.se_bps_hz) << ',' << flag(o.covered) << ',' << flag(o.outage) << '\n';
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

std::size_t parse_index(const std::string& s)
{
    std::size_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("not an index: '" + s + "'");
    return v;
}

bool parse_flag(const std::string& s)
{
    if (s == "1")
        return true;
    if (s == "0")
        return false;
    throw std::invalid_argument("not a 0/1 flag: '" + s + "'");
}

void write_text_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out)
        throw std::runtime_error("write failed for '" + path.string() + "'");
}

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "'");
    try
    {
        return json::parse(in);
    }
    catch (const json::parse_error& e)
    {
        throw std::runtime_error("failed to parse '" + path.string() + "': " + e.what());
    }
}

} // namespace

void write_ue_csv(std::ostream& out, std::span<const UeOutcome> downlink, std::span<const UeOutcome> uplink)
{
    const auto& cols = ue_csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i)
        out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto& o : downlink)
        write_row(out, o);
    for (const auto& o : uplink)
        write_row(out, o);
}

std::vector<UeOutcome> read_ue_csv(std::istream& in)
{
    const auto& cols = ue_csv_columns();
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("per-UE CSV is empty");
    if (split_csv_line(line) != cols)
        throw std::runtime_error("per-UE CSV header does not match the expected column order");

    std::vector<UeOutcome> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line))
    {
        ++line_no;
        if (line.empty())
            continue;
        const auto f = split_csv_line(line);
        if (f.size() != cols.size())
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected " + std::to_string(cols.size()) +
                                     " fields, got " + std::to_string(f.size()));
        std::size_t c = 0;
        try
        {
            UeOutcome o;
            o.scenario = f[c++];
            o.direction = parse_direction(f[c++]);
            o.drop = parse_index(f[c++]);
            o.ue_index = parse_index(f[c++]);
            o.position.x_m = parse_double(f[c++]);
            o.position.y_m = parse_double(f[c++]);
            o.serving_bs_index = parse_index(f[c++]);
            o.los_to_serving = parse_flag(f[c++]);
            o.d2d_m = parse_double(f[c++]);
            o.d3d_m = parse_double(f[c++]);
            o.pl_db = parse_double(f[c++]);
            o.rx_power_dbm = parse_double(f[c++]);
            if (!f[c].empty())
                o.interference_dbm = parse_double(f[c]);
            ++c;
            o.noise_dbm = parse_double(f[c++]);
            o.snr_db = parse_double(f[c++]);
            o.sinr_db = parse_double(f[c++]);
            o.se_bps_hz = parse_double(f[c++]);
            o.covered = parse_flag(f[c++]);
            o.outage = parse_flag(f[c++]);
            rows.push_back(std::move(o));
        }
        catch (const std::invalid_argument& e)
        {
            throw std::runtime_error("line " + std::to_string(line_no) + ", column '" + cols[c - 1] + "': " + e.what());
        }
    }
    return rows;
}

json summary_to_json(const SeSummary& s)
{
    return json{{"scenario", s.scenario},
                {"direction", to_string(s.direction)},
                {"ue_count", s.ue_count},
                {"mean_se_bps_hz", s.mean_se_bps_hz},
                {"median_se_bps_hz", s.median_se_bps_hz},
                {"edge_se_bps_hz", s.edge_se_bps_hz},
                {"outage_fraction", s.outage_fraction},
                {"deep_outage_fraction", s.deep_outage_fraction},
                {"bandwidth_hz", s.bandwidth_hz},
                {"mean_rate_bps", s.mean_rate_bps},
                {"edge_rate_bps", s.edge_rate_bps}};
}

SeSummary summary_from_json(const json& j)
{
    SeSummary s;
    s.scenario = j.at("scenario").get<std::string>();
    s.direction = parse_direction(j.at("direction").get<std::string>());
    s.ue_count = j.at("ue_count").get<std::size_t>();
    s.mean_se_bps_hz = j.at("mean_se_bps_hz").get<double>();
    s.median_se_bps_hz = j.at("median_se_bps_hz").get<double>();
    s.edge_se_bps_hz = j.at("edge_se_bps_hz").get<double>();
    s.outage_fraction = j.at("outage_fraction").get<double>();
    s.deep_outage_fraction = j.at("deep_outage_fraction").get<double>();
    s.bandwidth_hz = j.at("bandwidth_hz").get<double>();
    s.mean_rate_bps = j.at("mean_rate_bps").get<double>();
    s.edge_rate_bps = j.at("edge_rate_bps").get<double>();
    return s;
}

json make_summary_document(const ScenarioConfig& cfg, std::span<const SeSummary> summaries)
{
    json list = json::array();
    for (const auto& s : summaries)
        list.push_back(summary_to_json(s));
    return json{{"seed", cfg.seed}, {"config", config_to_json(cfg)}, {"summaries", list}};
}

void write_map_csv(std::ostream& out, const CoverageMap& map)
{
    out << "y_m\\x_m";
    for (double x : map.xs)
        out << ',' << format_double(x);
    out << '\n';
    for (std::size_t iy = 0; iy < map.ys.size(); ++iy)
    {
        out << format_double(map.ys[iy]);
        for (std::size_t ix = 0; ix < map.xs.size(); ++ix)
            out << ',' << format_double(map.at(ix, iy));
        out << '\n';
    }
}

RunArtifacts write_run(const std::filesystem::path& dir, const ScenarioResult& result)
{
    std::filesystem::create_directories(dir);
    RunArtifacts art;
    art.ue_csv = dir / kUeCsvFile;
    art.summary_json = dir / kSummaryFile;
    art.config_echo = dir / kConfigFile;

    std::ostringstream csv;
    write_ue_csv(csv, result.downlink, result.uplink);
    write_text_file(art.ue_csv, csv.str());

    const std::vector<SeSummary> summaries{result.downlink_summary, result.uplink_summary};
    write_text_file(art.summary_json, make_summary_document(result.config, summaries).dump(2) + "\n");
    write_text_file(art.config_echo, config_to_json(result.config).dump(2) + "\n");
    return art;
}

RunArtifacts write_map(const std::filesystem::path& dir, const ScenarioConfig& cfg, const CoverageMap& map)
{
    std::filesystem::create_directories(dir);
    RunArtifacts art;
    art.map_csvs.push_back(dir / ("map_" + to_string(map.mode) + ".csv"));
    art.config_echo = dir / kConfigFile;

    std::ostringstream csv;
    write_map_csv(csv, map);
    write_text_file(art.map_csvs.front(), csv.str());
    write_text_file(art.config_echo, config_to_json(cfg).dump(2) + "\n");
    return art;
}

ReportResult report_run(const std::filesystem::path& dir)
{
    const json doc = read_json_file(dir / kSummaryFile);
    const ScenarioConfig cfg = config_from_json(doc.at("config"));

    std::ifstream in(dir / kUeCsvFile);
    if (!in)
        throw std::runtime_error("cannot open '" + (dir / kUeCsvFile).string() + "'");
    const auto rows = read_ue_csv(in);

    std::vector<UeOutcome> dl;
    std::vector<UeOutcome> ul;
    for (const auto& r : rows)
        (r.direction == Direction::Downlink ? dl : ul).push_back(r);

    ReportResult report;
    if (!dl.empty())
        report.recomputed.push_back(summarize(dl, cfg.dl_bandwidth_hz));
    if (!ul.empty())
        report.recomputed.push_back(summarize(ul, cfg.ul_bandwidth_hz));
    for (const auto& s : doc.at("summaries"))
        report.stored.push_back(summary_from_json(s));
    report.matches = report.recomputed == report.stored;
    return report;
}

} // namespace umisim

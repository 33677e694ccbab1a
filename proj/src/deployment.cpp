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

#include "umisim/deployment.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace umisim
{

LayoutKind parse_layout_kind(std::string_view name)
{
    if (name == "single")
        return LayoutKind::Single;
    if (name == "seven")
        return LayoutKind::Seven;
    throw std::invalid_argument("unknown layout kind '" + std::string(name) + "' (expected single|seven)");
}

std::string_view to_string(LayoutKind kind)
{
    return kind == LayoutKind::Single ? "single" : "seven";
}

CellLayout make_layout(LayoutKind kind, double ring_radius_m, double bs_height_m)
{
    CellLayout layout;
    layout.kind = kind;
    layout.bs_positions.push_back({0.0, 0.0, bs_height_m});

    switch (kind)
    {
    case LayoutKind::Single:
        layout.coverage_radius_m = 200.0;
        break;
    case LayoutKind::Seven:
        if (!(ring_radius_m > 0.0))
            throw std::invalid_argument("seven-cell ring radius must be positive");
        for (int k = 0; k < 6; ++k)
        {
            const double angle = k * std::numbers::pi / 3.0;
            layout.bs_positions.push_back(
                {ring_radius_m * std::cos(angle), ring_radius_m * std::sin(angle), bs_height_m});
        }
        layout.coverage_radius_m = 400.0;
        break;
    default:
        throw std::invalid_argument("invalid layout kind");
    }
    return layout;
}

UeDrop drop_ues(const DropOptions& options, const CellLayout& layout, const RngPolicy& rng, std::uint64_t drop_index)
{
    if (options.count == 0)
        throw std::invalid_argument("UE count must be positive");
    if (!(options.radius_m > 0.0))
        throw std::invalid_argument("drop radius must be positive");

    UeDrop drop;
    drop.seed = rng.master_seed();
    drop.drop_index = drop_index;
    drop.ue_positions.reserve(options.count);

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t ue = 0; ue < options.count; ++ue)
    {
        auto gen = rng.stream(drop_index, ue, 0, StreamPurpose::UePosition);
        Position p;
        bool too_close = true;
        // Rejection loop; the excluded area is tiny compared to the disk.
        while (too_close)
        {
            const double r = options.radius_m * std::sqrt(unit(gen));
            const double theta = 2.0 * std::numbers::pi * unit(gen);
            p = {r * std::cos(theta), r * std::sin(theta), options.ue_height_m};
            too_close = false;
            for (const auto& bs : layout.bs_positions)
            {
                if (std::hypot(p.x_m - bs.x_m, p.y_m - bs.y_m) < options.min_drop_distance_m)
                {
                    too_close = true;
                    break;
                }
            }
        }
        drop.ue_positions.push_back(p);
    }
    return drop;
}

LinkGeometry link_geometry(const Position& bs, const Position& ue)
{
    const double d2d = std::hypot(bs.x_m - ue.x_m, bs.y_m - ue.y_m);
    return {d2d, std::hypot(d2d, bs.z_m - ue.z_m)};
}

} // namespace umisim

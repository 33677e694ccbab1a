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

#include "umisim/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace umisim
{

inline constexpr double kBsHeightM = 4.0;  // lamppost small cell
inline constexpr double kUeHeightM = 1.5;

struct Position
{
    double x_m = 0.0;
    double y_m = 0.0;
    double z_m = 0.0;  // height above ground

    friend bool operator==(const Position&, const Position&) = default;
};

enum class LayoutKind
{
    Single,
    Seven,
};

LayoutKind parse_layout_kind(std::string_view name);
std::string_view to_string(LayoutKind kind);

struct CellLayout
{
    LayoutKind kind = LayoutKind::Single;
    std::vector<Position> bs_positions;
    double coverage_radius_m = 200.0;
};

/// Single cell: one BS at the origin. Seven cell: one BS at the origin and
/// six on a ring of radius ring_radius_m at 60 degree spacing, starting on
/// the +x axis. Default coverage radius is 200 m (single) / 400 m (seven).
CellLayout make_layout(LayoutKind kind, double ring_radius_m, double bs_height_m = kBsHeightM);

struct UeDrop
{
    std::vector<Position> ue_positions;
    std::uint64_t seed = 0;
    std::uint64_t drop_index = 0;
};

struct DropOptions
{
    std::size_t count = 0;
    double radius_m = 0.0;
    double min_drop_distance_m = 1.0;  // 2D, to every BS
    double ue_height_m = kUeHeightM;
};

/// Area-uniform drop on the disk centred at the origin. UEs closer than
/// min_drop_distance_m to any BS are redrawn from the same substream.
UeDrop drop_ues(const DropOptions& options, const CellLayout& layout, const RngPolicy& rng, std::uint64_t drop_index);

struct LinkGeometry
{
    double d2d_m = 0.0;
    double d3d_m = 0.0;
};

LinkGeometry link_geometry(const Position& bs, const Position& ue);

} // namespace umisim

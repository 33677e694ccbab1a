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

#include "umisim/channel_models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace umisim
{

void PathLossParams::validate() const
{
    if (!(ple > 0.0))
        throw std::invalid_argument("path loss exponent must be positive, got " + std::to_string(ple));
    if (!(shadow_sigma_db >= 0.0))
        throw std::invalid_argument("shadow sigma must be non-negative, got " + std::to_string(shadow_sigma_db));
    if (reference_distance_m != 1.0)
        throw std::invalid_argument("CI reference distance is fixed at 1 m");
}

void LosModelParams::validate() const
{
    if (!(d1_m > 0.0) || !(d2_m > 0.0))
        throw std::invalid_argument("LOS model distances d1, d2 must be positive");
}

double fspl_1m(double fc_ghz)
{
    if (!(fc_ghz > 0.0))
        throw std::domain_error("carrier frequency must be positive, got " + std::to_string(fc_ghz) + " GHz");
    return 32.4 + 20.0 * std::log10(fc_ghz);
}

double ci_mean_path_loss(double fc_ghz, double d3d_m, const PathLossParams& params)
{
    if (!(d3d_m >= params.reference_distance_m))
        throw std::domain_error("CI path loss undefined below the 1 m reference distance, got " +
                                std::to_string(d3d_m) + " m");
    return fspl_1m(fc_ghz) + 10.0 * params.ple * std::log10(d3d_m / params.reference_distance_m);
}

double atmospheric_loss_db(double db_per_km, double d3d_m)
{
    return db_per_km * d3d_m / 1000.0;
}

double los_probability(double d2d_m, const LosModelParams& params)
{
    if (d2d_m < 0.0 || std::isnan(d2d_m))
        throw std::domain_error("2D distance must be non-negative");
    if (d2d_m <= params.d1_m)
        return 1.0;

    const double decay = std::exp(-d2d_m / params.d2_m);
    const double base = (params.d1_m / d2d_m) * (1.0 - decay) + decay;
    return std::clamp(base * base, 0.0, 1.0);
}

} // namespace umisim

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

#include <random>

namespace umisim
{

/// Close-in (CI) path loss coefficients for one link class.
struct PathLossParams
{
    double ple = 2.1;                   // path loss exponent n
    double shadow_sigma_db = 2.8;       // std. dev. of the log-normal shadowing
    double reference_distance_m = 1.0;  // CI anchor d0, fixed

    /// Throws std::invalid_argument if ple <= 0, sigma < 0 or d0 != 1 m.
    void validate() const;

    friend bool operator==(const PathLossParams&, const PathLossParams&) = default;
};

/// Directional LOS boresight parameters measured at 142 GHz.
inline constexpr PathLossParams kLosPathLoss{2.1, 2.8, 1.0};
/// Directional NLOS-best parameters measured at 142 GHz.
inline constexpr PathLossParams kNlosBestPathLoss{3.1, 8.3, 1.0};

/// Squared LOS probability model breakpoints.
struct LosModelParams
{
    double d1_m = 22.0;
    double d2_m = 100.0;

    void validate() const;

    friend bool operator==(const LosModelParams&, const LosModelParams&) = default;
};

/// One BS <-> UE link at a given carrier.
struct LinkRealization
{
    double d2d_m = 0.0;
    double d3d_m = 0.0;
    bool los = false;
    double shadow_db = 0.0;
    double mean_pl_db = 0.0;   // CI mean plus any atmospheric term
    double total_pl_db = 0.0;  // mean_pl_db + shadow_db
};

/// Free space path loss at 1 m: 32.4 + 20 log10(f / 1 GHz).
/// Throws std::domain_error for fc_ghz <= 0.
double fspl_1m(double fc_ghz);

/// CI path loss without shadowing. d3d_m below the 1 m anchor is a
/// std::domain_error; callers clamp or reject beforehand.
double ci_mean_path_loss(double fc_ghz, double d3d_m, const PathLossParams& params);

/// Constant-rate atmospheric loss over the 3D path (dB/km * km).
double atmospheric_loss_db(double db_per_km, double d3d_m);

/// One zero-mean Gaussian shadowing draw with std. dev. params.shadow_sigma_db.
template <typename Urbg>
double sample_shadow_fading(const PathLossParams& params, Urbg& rng)
{
    if (params.shadow_sigma_db == 0.0)
    {
        return 0.0;
    }
    std::normal_distribution<double> normal(0.0, params.shadow_sigma_db);
    return normal(rng);
}

/// Squared LOS probability as a function of 2D distance. Equal to 1 for
/// d2d_m <= d1 (including 0). Throws std::domain_error for negative distance.
double los_probability(double d2d_m, const LosModelParams& params);

template <typename Urbg>
bool sample_los_state(double d2d_m, const LosModelParams& params, Urbg& rng)
{
    const double p = los_probability(d2d_m, params);
    if (p >= 1.0)
    {
        return true;
    }
    std::bernoulli_distribution los(p);
    return los(rng);
}

} // namespace umisim

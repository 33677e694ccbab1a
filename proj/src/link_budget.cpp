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

#include "umisim/link_budget.hpp"

#include <cmath>
#include <stdexcept>

namespace umisim
{

void RadioEndpoint::validate() const
{
    if (!(noise_figure_db >= 0.0))
        throw std::invalid_argument("noise figure must be non-negative");
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double received_power_dbm(const RadioEndpoint& tx, double rx_gain_dbi, double total_pl_db)
{
    return tx.tx_power_dbm + tx.antenna_gain_dbi + rx_gain_dbi - total_pl_db;
}

double noise_power_dbm(double bandwidth_hz, double noise_figure_db)
{
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("bandwidth must be positive");
    return kThermalNoiseDbmPerHz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

std::optional<double> aggregate_interference_dbm(std::span<const double> interferers_dbm)
{
    if (interferers_dbm.empty())
        return std::nullopt;
    double sum_mw = 0.0;
    for (double i : interferers_dbm)
        sum_mw += dbm_to_mw(i);
    return mw_to_dbm(sum_mw);
}

double sinr_db(double signal_dbm, std::span<const double> interferers_dbm, double noise_dbm)
{
    double denom_mw = dbm_to_mw(noise_dbm);
    for (double i : interferers_dbm)
        denom_mw += dbm_to_mw(i);
    return mw_to_dbm(dbm_to_mw(signal_dbm) / denom_mw);
}

LinkBudgetResult evaluate_link_budget(double signal_dbm, std::span<const double> interferers_dbm, double noise_dbm)
{
    LinkBudgetResult r;
    r.rx_power_dbm = signal_dbm;
    r.noise_dbm = noise_dbm;
    r.interference_dbm = aggregate_interference_dbm(interferers_dbm);
    r.snr_db = signal_dbm - noise_dbm;
    // Keep the exact identity sinr == snr when nothing interferes.
    r.sinr_db = interferers_dbm.empty() ? r.snr_db : sinr_db(signal_dbm, interferers_dbm, noise_dbm);
    return r;
}

} // namespace umisim

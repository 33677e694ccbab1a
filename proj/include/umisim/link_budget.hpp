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

#include <optional>
#include <span>

namespace umisim
{

/// Transmit/receive characteristics of one end of a link.
struct RadioEndpoint
{
    double tx_power_dbm = 0.0;
    double antenna_gain_dbi = 0.0;
    double noise_figure_db = 0.0;

    double eirp_dbm() const { return tx_power_dbm + antenna_gain_dbi; }
    void validate() const;

    friend bool operator==(const RadioEndpoint&, const RadioEndpoint&) = default;
};

inline constexpr RadioEndpoint kTable1Bs{15.0, 40.0, 5.0};
inline constexpr RadioEndpoint kTable1Ue{0.0, 15.0, 7.0};

inline constexpr double kThermalNoiseDbmPerHz = -174.0;

struct LinkBudgetResult
{
    double rx_power_dbm = 0.0;
    double noise_dbm = 0.0;
    std::optional<double> interference_dbm;
    double snr_db = 0.0;
    double sinr_db = 0.0;
};

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

/// Pt + G_tx + G_rx - PL.
double received_power_dbm(const RadioEndpoint& tx, double rx_gain_dbi, double total_pl_db);

/// -174 dBm/Hz + 10 log10(B) + NF. Throws std::invalid_argument for B <= 0.
double noise_power_dbm(double bandwidth_hz, double noise_figure_db);

/// Power sum of the interferers in dBm, or nullopt when the list is empty.
std::optional<double> aggregate_interference_dbm(std::span<const double> interferers_dbm);

double sinr_db(double signal_dbm, std::span<const double> interferers_dbm, double noise_dbm);

/// Convenience: signal, noise and interferers -> SNR/SINR bundle.
LinkBudgetResult evaluate_link_budget(double signal_dbm, std::span<const double> interferers_dbm, double noise_dbm);

} // namespace umisim

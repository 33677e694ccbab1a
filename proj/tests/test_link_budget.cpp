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

#include <doctest.h>

#include "umisim/channel_models.hpp"
#include "umisim/link_budget.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace umisim;

TEST_CASE("received_power_dbm")
{
    // NLOS 200 m downlink: 15 + 40 + 15 - 146.77770
    CHECK(received_power_dbm(kTable1Bs, 15.0, 146.7776968) == doctest::Approx(-76.7776968));
    CHECK(received_power_dbm(kTable1Bs, 15.0, 70.0) == doctest::Approx(0.0));
    // uplink LOS 100 m: 0 + 15 + 40 - 117.45
    CHECK(received_power_dbm(kTable1Ue, 40.0, 117.45) == doctest::Approx(-62.45));
    CHECK(kTable1Bs.eirp_dbm() == 55.0);
    CHECK(kTable1Ue.eirp_dbm() == 15.0);
}

TEST_CASE("noise_power_dbm")
{
    CHECK(noise_power_dbm(1e9, 7.0) == doctest::Approx(-77.0));
    CHECK(noise_power_dbm(1e8, 5.0) == doctest::Approx(-89.0));
    CHECK(noise_power_dbm(1.0, 0.0) == doctest::Approx(-174.0));
    CHECK_THROWS_AS(noise_power_dbm(0.0, 7.0), std::invalid_argument);
    CHECK_THROWS_AS(noise_power_dbm(-1e6, 7.0), std::invalid_argument);
}

TEST_CASE("sinr_db")
{
    CHECK(sinr_db(-76.7776968, {}, -77.0) == doctest::Approx(0.2223032).epsilon(1e-6));

    const std::vector<double> equal{-50.0};
    CHECK(sinr_db(-50.0, equal, -200.0) == doctest::Approx(0.0).epsilon(1e-9));

    const std::vector<double> some{-90.0, -95.0};
    CHECK(sinr_db(-76.0, some, -77.0) < sinr_db(-76.0, {}, -77.0));
}

TEST_CASE("evaluate_link_budget identities")
{
    const auto clean = evaluate_link_budget(-70.0, {}, -77.0);
    CHECK_FALSE(clean.interference_dbm.has_value());
    CHECK(clean.sinr_db == clean.snr_db);
    CHECK(clean.snr_db == doctest::Approx(7.0));

    const std::vector<double> two{-80.0, -80.0};
    const auto dirty = evaluate_link_budget(-70.0, two, -77.0);
    REQUIRE(dirty.interference_dbm.has_value());
    CHECK(*dirty.interference_dbm == doctest::Approx(-80.0 + 3.0103).epsilon(1e-4));
}

TEST_CASE("interference monotonicity property")
{
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> p(-140.0, -30.0);
    std::uniform_int_distribution<int> k(0, 6);
    for (int trial = 0; trial < 2000; ++trial)
    {
        const double signal = p(gen);
        const double noise = p(gen);
        std::vector<double> interferers(static_cast<std::size_t>(k(gen)));
        for (auto& i : interferers)
            i = p(gen);

        const double before = sinr_db(signal, interferers, noise);
        CHECK(before <= signal - noise + 1e-12);

        interferers.push_back(p(gen));
        CHECK(sinr_db(signal, interferers, noise) < before);
    }
}

TEST_CASE("SNR is linear in EIRP")
{
    const double noise = noise_power_dbm(1e9, 7.0);
    RadioEndpoint bs = kTable1Bs;
    const double pl = ci_mean_path_loss(142.0, 150.0, kNlosBestPathLoss);
    const double base = received_power_dbm(bs, 15.0, pl) - noise;
    bs.tx_power_dbm += 1.0;
    CHECK(received_power_dbm(bs, 15.0, pl) - noise == doctest::Approx(base + 1.0));
}

TEST_CASE("downlink edge SNR consistency near 200 m")
{
    const double noise = noise_power_dbm(1e9, kTable1Ue.noise_figure_db);
    const double snr = [&](double d) {
        return received_power_dbm(kTable1Bs, kTable1Ue.antenna_gain_dbi,
                                  ci_mean_path_loss(142.0, d, kNlosBestPathLoss)) -
               noise;
    }(200.0);
    CHECK(snr == doctest::Approx(0.2223).epsilon(1e-3));
}

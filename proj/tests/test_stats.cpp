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

#include "umisim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace umisim;

TEST_CASE("spectral_efficiency")
{
    CHECK(spectral_efficiency(0.0) == doctest::Approx(1.0).epsilon(1e-12));
    // log2(1.1)
    CHECK(spectral_efficiency(-10.0) == doctest::Approx(0.1375035).epsilon(1e-6));
    CHECK(spectral_efficiency(-300.0) >= 0.0);
    CHECK(spectral_efficiency(-300.0) < 1e-29);
    CHECK(spectral_efficiency(30.0, 5.0) == 5.0);
    CHECK(spectral_efficiency(0.0, 5.0) == doctest::Approx(1.0));

    double prev = spectral_efficiency(-60.0);
    for (double s = -59.9; s < 60.0; s += 0.1)
    {
        const double v = spectral_efficiency(s);
        CHECK(v > prev);
        CHECK(v - prev < 0.05);  // continuity at this step size
        prev = v;
    }
}

TEST_CASE("percentile uses linear interpolation between closest ranks")
{
    const std::vector<double> v{4.0, 1.0, 3.0, 2.0, 5.0};
    CHECK(percentile(v, 0.0) == 1.0);
    CHECK(percentile(v, 1.0) == 5.0);
    CHECK(percentile(v, 0.5) == 3.0);
    CHECK(percentile(v, 0.05) == doctest::Approx(1.2));  // position 0.2
    CHECK(percentile(std::vector<double>{1.0, 2.0}, 0.5) == 1.5);
    CHECK_THROWS_AS(percentile(std::vector<double>{}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(percentile(v, 1.5), std::invalid_argument);
}

TEST_CASE("summarize")
{
    SUBCASE("identical samples")
    {
        const std::vector<double> se(40, 2.5);
        const std::vector<double> sinr(40, 5.0);
        const auto s = summarize(se, sinr, 1e9, "single", Direction::Downlink);
        CHECK(s.mean_se_bps_hz == 2.5);
        CHECK(s.median_se_bps_hz == 2.5);
        CHECK(s.edge_se_bps_hz == 2.5);
        CHECK(s.outage_fraction == 0.0);
        CHECK(s.mean_rate_bps == 2.5e9);
    }

    SUBCASE("outage fractions")
    {
        const std::vector<double> sinr{-20.0, -5.0, 0.0, 3.0};
        std::vector<double> se;
        for (double x : sinr)
            se.push_back(spectral_efficiency(x));
        const auto s = summarize(se, sinr, 1e8, "seven", Direction::Uplink);
        CHECK(s.outage_fraction == 0.5);
        CHECK(s.deep_outage_fraction == 0.25);
        CHECK(s.direction == Direction::Uplink);
        CHECK(s.ue_count == 4);
    }

    SUBCASE("errors")
    {
        CHECK_THROWS_AS(summarize(std::vector<double>{}, std::vector<double>{}, 1e9, "x", Direction::Downlink),
                        std::invalid_argument);
        CHECK_THROWS_AS(summarize(std::vector<double>{1.0}, std::vector<double>{}, 1e9, "x", Direction::Downlink),
                        std::invalid_argument);
    }

    SUBCASE("permutation invariance, bandwidth scaling, ordering")
    {
        std::mt19937_64 gen(12);
        std::normal_distribution<double> sinr_dist(5.0, 10.0);
        std::vector<double> sinr(1001);
        for (auto& x : sinr)
            x = sinr_dist(gen);
        std::vector<double> se;
        for (double x : sinr)
            se.push_back(spectral_efficiency(x));

        const auto base = summarize(se, sinr, 1e9, "s", Direction::Downlink);
        CHECK(base.edge_se_bps_hz <= base.median_se_bps_hz);
        CHECK(base.median_se_bps_hz <= *std::max_element(se.begin(), se.end()));
        CHECK(base.mean_rate_bps == base.mean_se_bps_hz * 1e9);
        CHECK(base.edge_rate_bps == base.edge_se_bps_hz * 1e9);

        const auto doubled = summarize(se, sinr, 2e9, "s", Direction::Downlink);
        CHECK(doubled.mean_se_bps_hz == base.mean_se_bps_hz);
        CHECK(doubled.median_se_bps_hz == base.median_se_bps_hz);
        CHECK(doubled.mean_rate_bps == doctest::Approx(2.0 * base.mean_rate_bps));
        CHECK(doubled.edge_rate_bps == doctest::Approx(2.0 * base.edge_rate_bps));

        // shuffle pairs together
        std::vector<std::size_t> idx(se.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), gen);
        std::vector<double> se2;
        std::vector<double> sinr2;
        for (auto i : idx)
        {
            se2.push_back(se[i]);
            sinr2.push_back(sinr[i]);
        }
        const auto shuffled = summarize(se2, sinr2, 1e9, "s", Direction::Downlink);
        CHECK(shuffled.mean_se_bps_hz == doctest::Approx(base.mean_se_bps_hz).epsilon(1e-12));
        CHECK(shuffled.median_se_bps_hz == base.median_se_bps_hz);
        CHECK(shuffled.edge_se_bps_hz == base.edge_se_bps_hz);
        CHECK(shuffled.outage_fraction == base.outage_fraction);
    }
}

TEST_CASE("build_cdf")
{
    const auto cdf = build_cdf(std::vector<double>{3.0, 1.0, 2.0});
    CHECK(cdf.values == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(cdf.at(2.0) == doctest::Approx(2.0 / 3.0));
    CHECK(cdf.at(0.5) == 0.0);
    CHECK(cdf.at(3.0) == 1.0);

    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    std::vector<double> xs(2000);
    for (auto& x : xs)
        x = u(gen);
    const auto a = build_cdf(xs);
    CHECK(std::is_sorted(a.probabilities.begin(), a.probabilities.end()));
    CHECK(a.probabilities.back() == 1.0);
    CHECK(a.probabilities.front() > 0.0);
    CHECK(a.at(percentile(xs, 0.05)) == doctest::Approx(0.05).epsilon(0.02));

    std::shuffle(xs.begin(), xs.end(), gen);
    const auto b = build_cdf(xs);
    CHECK(a.values == b.values);
    CHECK(a.probabilities == b.probabilities);

    CHECK_THROWS_AS(build_cdf(std::vector<double>{}), std::invalid_argument);
}

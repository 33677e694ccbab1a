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

// Covered tests:
// - FSPL anchor values and decade behaviour
// - CI mean path loss values, domain errors, decade rule, monotonicity
// - LOS probability values, continuity at 0, bounds and monotonicity
// - Shadow fading moments and determinism
// - Bernoulli LOS draws vs the analytic probability

#include <doctest.h>

#include "umisim/channel_models.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace umisim;

TEST_CASE("fspl_1m")
{
    CHECK(fspl_1m(1.0) == doctest::Approx(32.4).epsilon(1e-12));
    // hand computation: 32.4 + 20 log10(142) = 75.44577
    CHECK(fspl_1m(142.0) == doctest::Approx(75.44577).epsilon(1e-6));
    CHECK(fspl_1m(140.0) == doctest::Approx(75.32256).epsilon(1e-6));
    CHECK(fspl_1m(10.0) - fspl_1m(1.0) == doctest::Approx(20.0).epsilon(1e-12));

    CHECK_THROWS_AS(fspl_1m(0.0), std::domain_error);
    CHECK_THROWS_AS(fspl_1m(-5.0), std::domain_error);
}

TEST_CASE("ci_mean_path_loss")
{
    CHECK(ci_mean_path_loss(142.0, 1.0, kNlosBestPathLoss) == fspl_1m(142.0));
    CHECK(ci_mean_path_loss(142.0, 1.0, kLosPathLoss) == fspl_1m(142.0));

    // 75.44577 + 31 log10(200), 75.44577 + 21 * 2
    CHECK(ci_mean_path_loss(142.0, 200.0, kNlosBestPathLoss) == doctest::Approx(146.77770).epsilon(1e-7));
    CHECK(ci_mean_path_loss(142.0, 100.0, kLosPathLoss) == doctest::Approx(117.44577).epsilon(1e-7));

    CHECK_THROWS_AS(ci_mean_path_loss(142.0, 0.999, kLosPathLoss), std::domain_error);
    CHECK_THROWS_AS(ci_mean_path_loss(142.0, 0.0, kLosPathLoss), std::domain_error);
}

TEST_CASE("ci_mean_path_loss properties")
{
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> dist(1.0, 5000.0);
    std::uniform_real_distribution<double> ple(0.5, 6.0);

    for (int i = 0; i < 2000; ++i)
    {
        const double d = dist(gen);
        const PathLossParams p{ple(gen), 0.0, 1.0};

        // decade rule
        CHECK(ci_mean_path_loss(142.0, 10.0 * d, p) - ci_mean_path_loss(142.0, d, p) ==
              doctest::Approx(10.0 * p.ple).epsilon(1e-9));

        // strictly increasing in distance and in the exponent
        CHECK(ci_mean_path_loss(142.0, d * 1.01, p) > ci_mean_path_loss(142.0, d, p));
        if (d > 1.0)
        {
            const PathLossParams steeper{p.ple + 0.1, 0.0, 1.0};
            CHECK(ci_mean_path_loss(142.0, d, steeper) > ci_mean_path_loss(142.0, d, p));
        }

        CHECK(ci_mean_path_loss(142.0, d, kNlosBestPathLoss) >= ci_mean_path_loss(142.0, d, kLosPathLoss));
    }
}

TEST_CASE("path loss params validation")
{
    CHECK_NOTHROW(kLosPathLoss.validate());
    CHECK_NOTHROW(kNlosBestPathLoss.validate());
    CHECK_THROWS_AS((PathLossParams{0.0, 1.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((PathLossParams{2.0, -1.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((PathLossParams{2.0, 1.0, 2.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((LosModelParams{0.0, 100.0}.validate()), std::invalid_argument);
}

TEST_CASE("los_probability")
{
    const LosModelParams nyu{};
    CHECK(los_probability(0.0, nyu) == 1.0);
    CHECK(los_probability(10.0, nyu) == 1.0);
    CHECK(los_probability(22.0, nyu) == 1.0);

    // ((22/100)(1 - e^-1) + e^-1)^2 and ((22/200)(1 - e^-2) + e^-2)^2
    CHECK(los_probability(100.0, nyu) == doctest::Approx(0.25699).epsilon(1e-4));
    CHECK(los_probability(200.0, nyu) == doctest::Approx(0.05311).epsilon(1e-3));

    CHECK_THROWS_AS(los_probability(-1.0, nyu), std::domain_error);
}

TEST_CASE("los_probability bounds and monotonicity")
{
    const LosModelParams nyu{};
    double prev = los_probability(22.0, nyu);
    for (double d = 22.5; d < 3000.0; d += 0.5)
    {
        const double p = los_probability(d, nyu);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        CHECK(p < prev);
        prev = p;
    }
    for (double d = 0.0; d <= 22.0; d += 0.25)
        CHECK(los_probability(d, nyu) == 1.0);
}

TEST_CASE("sample_shadow_fading")
{
    SUBCASE("degenerate sigma")
    {
        std::mt19937_64 gen(1);
        for (int i = 0; i < 100; ++i)
            CHECK(sample_shadow_fading(PathLossParams{3.1, 0.0, 1.0}, gen) == 0.0);
    }

    SUBCASE("moments at 1e6 draws")
    {
        std::mt19937_64 gen(2024);
        const int n = 1'000'000;
        double sum = 0.0;
        double sum_sq = 0.0;
        for (int i = 0; i < n; ++i)
        {
            const double x = sample_shadow_fading(kNlosBestPathLoss, gen);
            sum += x;
            sum_sq += x * x;
        }
        const double mean = sum / n;
        const double sd = std::sqrt(sum_sq / n - mean * mean);
        CHECK(std::abs(mean) < 0.05);
        CHECK(std::abs(sd - 8.3) < 0.05);
    }

    SUBCASE("moments within 3 standard errors at 1e5 draws")
    {
        for (const auto& p : {kLosPathLoss, kNlosBestPathLoss})
        {
            std::mt19937_64 gen(99);
            const int n = 100'000;
            std::vector<double> xs(n);
            double sum = 0.0;
            for (auto& x : xs)
            {
                x = sample_shadow_fading(p, gen);
                sum += x;
            }
            const double mean = sum / n;
            double ss = 0.0;
            for (double x : xs)
                ss += (x - mean) * (x - mean);
            const double sd = std::sqrt(ss / (n - 1));
            const double se_mean = p.shadow_sigma_db / std::sqrt(n);
            const double se_sd = p.shadow_sigma_db / std::sqrt(2.0 * (n - 1));
            CHECK(std::abs(mean) < 3.0 * se_mean);
            CHECK(std::abs(sd - p.shadow_sigma_db) < 3.0 * se_sd);
        }
    }

    SUBCASE("same seed, same sequence")
    {
        std::mt19937_64 a(5);
        std::mt19937_64 b(5);
        for (int i = 0; i < 1000; ++i)
            CHECK(sample_shadow_fading(kLosPathLoss, a) == sample_shadow_fading(kLosPathLoss, b));
    }
}

TEST_CASE("sample_los_state")
{
    const LosModelParams nyu{};
    std::mt19937_64 gen(3);
    for (int i = 0; i < 1000; ++i)
        CHECK(sample_los_state(5.0, nyu, gen));

    const int n = 100'000;
    int los = 0;
    for (int i = 0; i < n; ++i)
        los += sample_los_state(100.0, nyu, gen);
    CHECK(std::abs(static_cast<double>(los) / n - los_probability(100.0, nyu)) < 0.01);
}

TEST_CASE("atmospheric term")
{
    CHECK(atmospheric_loss_db(0.0, 300.0) == 0.0);
    CHECK(atmospheric_loss_db(10.0, 200.0) == doctest::Approx(2.0));
}

#include "tvws/propagation.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

using namespace tvws;

namespace {

// Reference values evaluated independently (arbitrary-precision hand
// evaluation of the closed forms) for f = 500 MHz, ht = 30 m, hr = 5 m.
constexpr double kUrbanAt1Km = 111.80729775612059;
constexpr double kSlopePerDecade = 35.2248557815862;
constexpr double kSuburbanCorrection = 8.534066431461259;
constexpr double kSuburbanAt1Km = 103.27323132465933;
constexpr double kTableOneRadiusKm = 2.9843996547598453;
constexpr double kNoiseFloor5MHz = -100.01029995663981;

} // namespace

TEST_CASE("urban Hata closed form")
{
    CHECK(hata_urban_pl(1.0, 500.0, 30.0, 5.0) == doctest::Approx(111.81).epsilon(0.05 / 111.81));
    CHECK(hata_urban_pl(1.0, 500.0, 30.0, 5.0) == doctest::Approx(kUrbanAt1Km).epsilon(1e-12));
    const double decade = hata_urban_pl(10.0, 500.0, 30.0, 5.0) - hata_urban_pl(1.0, 500.0, 30.0, 5.0);
    CHECK(decade == doctest::Approx(35.23).epsilon(0.05 / 35.23));
    CHECK(decade == doctest::Approx(kSlopePerDecade).epsilon(1e-12));
}

TEST_CASE("suburban correction")
{
    for (double d : {1.0, 2.0, 7.5, 20.0}) {
        const double diff = hata_suburban_pl(d, 500.0, 30.0, 5.0) - hata_urban_pl(d, 500.0, 30.0, 5.0);
        CHECK(diff == doctest::Approx(-8.53).epsilon(0.05 / 8.53));
        CHECK(diff == doctest::Approx(-kSuburbanCorrection).epsilon(1e-12));
    }
    CHECK(hata_suburban_pl(2.98, 500.0, 30.0, 5.0) == doctest::Approx(120.0).epsilon(0.2 / 120.0));
    const double at28 = hata_suburban_pl(3.0, 150.0, 30.0, 5.0) - hata_urban_pl(3.0, 150.0, 30.0, 5.0);
    const double l = std::log10(150.0 / 28.0);
    CHECK(at28 == doctest::Approx(-(2 * l * l + 5.4)));
}

TEST_CASE("Hata range checks")
{
    CHECK_THROWS_AS(hata_urban_pl(0.5, 500.0, 30.0, 5.0), std::domain_error);
    CHECK_THROWS_AS(hata_urban_pl(25.0, 500.0, 30.0, 5.0), std::domain_error);
    CHECK_THROWS_AS(hata_urban_pl(2.0, 100.0, 30.0, 5.0), std::domain_error);
    CHECK_THROWS_AS(hata_suburban_pl(2.0, 500.0, 10.0, 5.0), std::domain_error);
    CHECK_THROWS_AS(hata_suburban_pl(2.0, 500.0, 30.0, 12.0), std::domain_error);
}

TEST_CASE("path loss strictly increasing on [1, 20] km")
{
    double prev = hata_suburban_pl(1.0, 500.0, 30.0, 5.0);
    for (double d = 1.01; d <= 20.0; d += 0.01) {
        const double pl = hata_suburban_pl(d, 500.0, 30.0, 5.0);
        REQUIRE(pl > prev);
        prev = pl;
    }
}

TEST_CASE("link budget and coverage radius")
{
    const RadioParams radio;
    const auto lb = link_budget(radio, 5e6);
    CHECK(lb.max_allowed_pl_db == doctest::Approx(120.0).epsilon(1e-12));
    CHECK(lb.noise_floor_dbm == doctest::Approx(kNoiseFloor5MHz));

    const double r = coverage_radius(radio);
    CHECK(r >= 2.9);
    CHECK(r <= 3.1);
    CHECK(r == doctest::Approx(kTableOneRadiusKm).epsilon(1e-3 / kTableOneRadiusKm)); // 1 m
    CHECK(std::abs(hata_suburban_pl(r, 500.0, 30.0, 5.0) - lb.max_allowed_pl_db) < 0.01);

    RadioParams louder = radio;
    louder.tx_power_dbm += kSlopePerDecade;
    CHECK(coverage_radius(louder) / r == doctest::Approx(10.0).epsilon(1e-3));
}

TEST_CASE("coverage below the 1 km floor is rejected")
{
    RadioParams radio;
    radio.rx_sensitivity_dbm = -30.0;
    CHECK_THROWS_WITH_AS(coverage_radius(radio), doctest::Contains("coverage below Hata validity floor"),
                         ValidationError);
}

TEST_CASE("received power")
{
    const RadioParams radio;
    const double r = coverage_radius(radio);
    CHECK(received_power(radio, r) - radio.noise_figure_db == doctest::Approx(-101.0).epsilon(0.1 / 101.0));
    CHECK(received_power(radio, 1.0) == doctest::Approx(-77.3).epsilon(0.2 / 77.3));
    CHECK(received_power(radio, 1.0) == doctest::Approx(26.0 - kSuburbanAt1Km));

    // Near-field clamp.
    CHECK(received_power(radio, 0.2) == received_power(radio, 1.0));
    CHECK(received_power(radio, 0.0) == received_power(radio, 1.0));

    RadioParams bare = radio;
    bare.tx_gain_db = bare.rx_gain_db = bare.cable_loss_db = 0.0;
    CHECK(received_power(bare, 4.0) ==
          doctest::Approx(bare.tx_power_dbm - hata_suburban_pl(4.0, 500.0, 30.0, 5.0)));
}

TEST_CASE("sinr")
{
    const std::vector<double> none;
    CHECK(sinr_db(-100.0, none, -100.0) == doctest::Approx(0.0));
    const std::vector<double> equal{-70.0};
    CHECK(sinr_db(-70.0, equal, -200.0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(sinr_db(-77.3, none, -100.0) == doctest::Approx(22.7));
}

TEST_CASE("sinr property: interference only lowers it")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> power(-120.0, -50.0);
    for (int i = 0; i < 500; ++i) {
        const double s = power(rng);
        const double n = power(rng);
        std::vector<double> interferers;
        const double snr = sinr_db(s, interferers, n);
        CHECK(snr == doctest::Approx(s - n));
        double prev = snr;
        for (int j = 0; j < 3; ++j) {
            interferers.push_back(power(rng));
            const double v = sinr_db(s, interferers, n);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("link rate")
{
    CHECK(link_rate_bps(300.0, 5e6) == doctest::Approx(4.8 * 5e6));
    CHECK(link_rate_bps(-std::numeric_limits<double>::infinity(), 5e6) == 0.0);
    // Shannon arithmetic with the cap lifted, then the same SINR under the
    // default cap.
    CHECK(link_rate_bps(15.0, 5e6, 10.0) == doctest::Approx(25.1e6).epsilon(0.05e6 / 25.1e6));
    CHECK(link_rate_bps(15.0, 5e6, 10.0) == doctest::Approx(25139038.3667526));
    CHECK(link_rate_bps(15.0, 5e6) == doctest::Approx(24e6));
    CHECK(link_rate_bps(10.0, 5e6) == doctest::Approx(5e6 * std::log2(11.0)));
}

TEST_CASE("link rate property: monotone in SINR, linear in bandwidth")
{
    double prev = 0.0;
    for (double s = -30.0; s <= 40.0; s += 0.25) {
        const double r = link_rate_bps(s, 5e6);
        CHECK(r >= prev);
        CHECK(link_rate_bps(s, 10e6) == doctest::Approx(2.0 * r));
        prev = r;
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhtl/thermal_state.hpp"
#include "lhtl/units.hpp"

#include <cmath>
#include <limits>

using namespace lhtl;
using namespace lhtl::thermal;

TEST_CASE("energy ratio") {
    CHECK(energy_ratio(2.0, 1.0, UnitSystem::natural()) == 2.0);
    CHECK(energy_ratio(1.0, 0.0, UnitSystem::si()) ==
          std::numeric_limits<double>::infinity());
    CHECK(energy_ratio(1.0, 1e30, UnitSystem::si()) < 1e-20);

    // omega = 2*pi*2e9 rad/s, T = 100 K; frozen from a high-precision evaluation
    const double om = to_angular({2e9, FrequencyConvention::Cyclic});
    const double x = energy_ratio(om, 100.0, UnitSystem::si());
    CHECK(std::abs(x - 9.5984861408512658e-4) / 9.5984861408512658e-4 < 1e-13);

    CHECK_THROWS_AS(energy_ratio(0.0, 1.0, UnitSystem::si()), std::domain_error);
    CHECK_THROWS_AS(energy_ratio(-1.0, 1.0, UnitSystem::si()), std::domain_error);
    CHECK_THROWS_AS(energy_ratio(1.0, -1.0, UnitSystem::si()), std::domain_error);
}

TEST_CASE("thermal photon number") {
    CHECK(thermal_photon_number(std::numeric_limits<double>::infinity()) == 0.0);
    CHECK(thermal_photon_number(std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-12));

    // frozen from a high-precision evaluation of 1/(e^x - 1)
    const double x = 9.5984861408512658e-4;
    CHECK(thermal_photon_number(x) ==
          doctest::Approx(1041.3310367921117).epsilon(1e-12));

    CHECK_THROWS_AS(thermal_photon_number(0.0), std::domain_error);
    CHECK_THROWS_AS(thermal_photon_number(-1.0), std::domain_error);
    CHECK_THROWS_AS(thermal_photon_number(std::nan("")), std::domain_error);
}

TEST_CASE("series branch agrees with the direct formula at the switchover") {
    for (double x : {1.0e-8 * (1.0 - 1e-12), 5e-9, 1e-9, 2e-8, 1.2e-8}) {
        const double via_impl = thermal_photon_number(x);
        const double direct = 1.0 / std::expm1(x);
        CHECK(std::abs(via_impl - direct) <= 1e-12 * direct);
    }
}

TEST_CASE("occupation is monotone") {
    double prev = thermal_photon_number(1e-6);
    for (double x = 2e-6; x < 60.0; x *= 1.7) {
        const double cur = thermal_photon_number(x);
        CHECK(cur < prev); // strictly decreasing in x
        prev = cur;
    }

    // strictly increasing in T at fixed omega
    const UnitSystem& u = UnitSystem::si();
    const double om = 1e10;
    double prev_n0 = 0.0;
    for (double t = 0.01; t < 1e4; t *= 3.0) {
        const double n0 = thermal_photon_number(energy_ratio(om, t, u));
        CHECK(n0 > prev_n0);
        prev_n0 = n0;
    }
}

TEST_CASE("theta from n0") {
    for (ThetaConvention conv : {ThetaConvention::Paper, ThetaConvention::Standard}) {
        const BogoliubovParams b = theta_from_n0(0.0, conv);
        CHECK(b.theta == 0.0);
        CHECK(b.mu == 1.0);
        CHECK(b.tau == 0.0);
    }
    CHECK(theta_from_n0(3.0, ThetaConvention::Paper).theta ==
          doctest::Approx(1.8184464592320668).epsilon(1e-12));
    CHECK(theta_from_n0(3.0, ThetaConvention::Standard).theta ==
          doctest::Approx(1.3169578969248166).epsilon(1e-12));
    CHECK_THROWS_AS(theta_from_n0(-0.1, ThetaConvention::Paper), std::domain_error);
}

TEST_CASE("both conventions reconstruct n0 and satisfy the hyperbolic identity") {
    for (double n0 = 1e-12; n0 < 1e6; n0 *= 17.0) {
        const BogoliubovParams paper = theta_from_n0(n0, ThetaConvention::Paper);
        CHECK(std::abs(paper.tau - n0) <= 1e-12 * n0);

        const BogoliubovParams standard = theta_from_n0(n0, ThetaConvention::Standard);
        CHECK(std::abs(standard.tau * standard.tau - n0) <= 1e-12 * n0);

        for (const BogoliubovParams& b : {paper, standard}) {
            CHECK(b.theta >= 0.0);
            CHECK(b.mu >= 1.0);
            CHECK(b.tau >= 0.0);
            CHECK(std::abs(b.mu * b.mu - b.tau * b.tau - 1.0) <= 1e-12 * b.mu * b.mu);
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhtl/classical_line.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace lhtl::line;

namespace {

std::vector<double> uniform_grid(double lo, double hi, double h) {
    std::vector<double> g;
    for (double z = lo; z <= hi + 1e-12; z += h)
        g.push_back(z);
    return g;
}

} // namespace

TEST_CASE("line quantities, unit cell in natural numbers") {
    const auto q = line_quantities({1.0, 1.0, std::nullopt}, 1.0);
    CHECK(q.beta == -1.0);
    CHECK(q.z_char == 1.0);
    CHECK(q.v_phase == -1.0);
    CHECK(q.v_group == 1.0);
    CHECK(q.mu_eff == -1.0);
    CHECK(q.eps_eff == -1.0);
    CHECK(q.gamma == std::complex<double>(0.0, -1.0));
    CHECK(q.z_series == std::complex<double>(0.0, -1.0));
    CHECK(q.y_shunt == std::complex<double>(0.0, -1.0));
}

TEST_CASE("line quantities at omega = 2") {
    const auto q = line_quantities({1.0, 1.0, std::nullopt}, 2.0);
    CHECK(q.beta == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(q.v_phase == doctest::Approx(-4.0).epsilon(1e-15));
    CHECK(q.v_group == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(q.mu_eff == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(q.eps_eff == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("50 ohm cell") {
    for (double omega : {1.0, 2e9, 1.2566370614359173e10}) {
        const auto q = line_quantities({1e-12, 2.5e-9, std::nullopt}, omega);
        CHECK(q.z_char == doctest::Approx(50.0).epsilon(1e-12));
    }
}

TEST_CASE("line quantities reject bad input") {
    CHECK_THROWS_AS(line_quantities({1.0, 1.0, std::nullopt}, 0.0), std::domain_error);
    CHECK_THROWS_AS(line_quantities({1.0, 1.0, std::nullopt}, -2.0), std::domain_error);
    CHECK_THROWS_AS(line_quantities({0.0, 1.0, std::nullopt}, 1.0), std::domain_error);
    CHECK_THROWS_AS(line_quantities({1.0, -1.0, std::nullopt}, 1.0), std::domain_error);
    CHECK_THROWS_AS(line_quantities({1.0, 1.0, -0.5}, 1.0), std::domain_error);
    CHECK_THROWS_AS(line_quantities({std::nan(""), 1.0, std::nullopt}, 1.0),
                    std::domain_error);
}

TEST_CASE("backward-wave invariants hold across random cells") {
    std::mt19937 rng(42u);
    std::uniform_real_distribution<double> log_c(-13.0, -6.0);
    std::uniform_real_distribution<double> log_l(-10.0, -3.0);
    std::uniform_real_distribution<double> log_w(3.0, 11.0);
    std::uniform_real_distribution<double> log_k(-2.0, 2.0);

    for (int i = 0; i < 200; ++i) {
        const double cl = std::pow(10.0, log_c(rng));
        const double ll = std::pow(10.0, log_l(rng));
        const double omega = std::pow(10.0, log_w(rng));
        const auto q = line_quantities({cl, ll, std::nullopt}, omega);

        CHECK(q.beta < 0.0);
        CHECK(q.v_phase < 0.0);
        CHECK(q.v_group > 0.0);
        CHECK(q.eps_eff < 0.0);
        CHECK(q.mu_eff < 0.0);
        CHECK(q.gamma.real() == 0.0);
        CHECK(q.gamma.imag() == q.beta);
        CHECK(q.v_phase == -q.v_group);

        const double nri = -std::sqrt(q.eps_eff * q.mu_eff);
        const double ratio = q.beta / omega;
        CHECK(std::abs(nri - ratio) <= 1e-12 * std::abs(ratio));

        // scaling: (C, L) -> (kC, kL) divides beta by k and keeps Z
        const double k = std::pow(10.0, log_k(rng));
        const auto qs = line_quantities({k * cl, k * ll, std::nullopt}, omega);
        CHECK(std::abs(qs.beta * k - q.beta) <= 1e-12 * std::abs(q.beta));
        CHECK(std::abs(qs.z_char - q.z_char) <= 1e-12 * q.z_char);
    }
}

TEST_CASE("cell length") {
    const LineParams unit{1.0, 1.0, std::nullopt};
    CHECK(cell_length(1, 1.0, unit) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
    CHECK(cell_length(3, 1.0, unit) == doctest::Approx(6.0 * std::numbers::pi).epsilon(1e-15));
    CHECK(cell_length(1, 2.0, unit) == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-15));
    CHECK_THROWS_AS(cell_length(0, 1.0, unit), std::domain_error);
    CHECK_THROWS_AS(cell_length(-3, 1.0, unit), std::domain_error);
}

TEST_CASE("wave residual vanishes for the zero field") {
    const auto q = line_quantities({1.0, 1.0, std::nullopt}, 1.0);
    const WaveSolution w{{0.0, 0.0}, {0.0, 0.0}, uniform_grid(0.0, 1.0, 0.1)};
    CHECK(wave_residual(q, w) == 0.0);
}

TEST_CASE("wave residual is second-order small") {
    const auto q = line_quantities({1.0, 1.0, std::nullopt}, 1.0); // gamma = -i
    const double two_pi = 2.0 * std::numbers::pi;
    const WaveSolution fine{{1.0, 0.0}, {0.0, 0.0}, uniform_grid(0.0, two_pi, 1e-3)};
    const double r_fine = wave_residual(q, fine);
    CHECK(r_fine <= 1e-5);
    CHECK(r_fine > 0.0);

    const WaveSolution coarse{{1.0, 0.0}, {0.0, 0.0}, uniform_grid(0.0, two_pi, 2e-3)};
    const double r_coarse = wave_residual(q, coarse);
    const double ratio = r_coarse / r_fine;
    CHECK(ratio > 3.2);
    CHECK(ratio < 4.8);
}

TEST_CASE("wave residual converges for complex amplitudes too") {
    const auto q = line_quantities({1.0, 1.0, std::nullopt}, 2.0);
    const std::complex<double> a{0.7, -0.4}, b{-0.1, 0.9};
    const double r1 = wave_residual(q, {a, b, uniform_grid(0.0, 4.0, 4e-3)});
    const double r2 = wave_residual(q, {a, b, uniform_grid(0.0, 4.0, 2e-3)});
    CHECK(r1 / r2 > 3.2);
    CHECK(r1 / r2 < 4.8);
}

TEST_CASE("wave residual rejects bad grids") {
    const auto q = line_quantities({1.0, 1.0, std::nullopt}, 1.0);
    CHECK_THROWS_AS(wave_residual(q, {{1, 0}, {0, 0}, {0.0, 0.1, 0.2, 0.3}}),
                    std::domain_error);
    CHECK_THROWS_AS(wave_residual(q, {{1, 0}, {0, 0}, {0.0, 0.2, 0.1, 0.3, 0.4}}),
                    std::domain_error);
}

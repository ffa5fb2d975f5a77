#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhtl/units.hpp"

#include <json.hpp>

#include <cstring>
#include <random>
#include <sstream>

using namespace lhtl;

TEST_CASE("to_angular basic values") {
    CHECK(to_angular({0.0, FrequencyConvention::Cyclic}) == 0.0);
    CHECK(to_angular({1.0, FrequencyConvention::Angular}) == 1.0);
    // 2*pi*2e9, frozen from a high-precision evaluation
    const double expected = 1.2566370614359173e10;
    const double got = to_angular({2e9, FrequencyConvention::Cyclic});
    CHECK(std::abs(got - expected) / expected < 1e-15);
}

TEST_CASE("to_angular rejects bad input") {
    CHECK_THROWS_AS(to_angular({-1.0, FrequencyConvention::Cyclic}), std::domain_error);
    CHECK_THROWS_AS(to_angular({std::nan(""), FrequencyConvention::Angular}),
                    std::domain_error);
}

TEST_CASE("to_angular is idempotent on angular input") {
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> dist(0.0, 1e12);
    for (int i = 0; i < 200; ++i) {
        const double v = dist(rng);
        const double once = to_angular({v, FrequencyConvention::Angular});
        const double twice = to_angular({once, FrequencyConvention::Angular});
        CHECK(once == v);
        CHECK(twice == once);
    }
}

TEST_CASE("unit systems carry the expected constants") {
    const UnitSystem& si = UnitSystem::si();
    CHECK(si.hbar == 1.054571817e-34);
    CHECK(si.k_boltzmann == 1.380649e-23);
    CHECK(si.kind == UnitKind::Si);

    const UnitSystem& nat = UnitSystem::natural();
    CHECK(nat.hbar == 1.0);
    CHECK(nat.k_boltzmann == 1.0);
    CHECK(nat.kind == UnitKind::Natural);
}

TEST_CASE("constants round-trip serialization bit-exactly") {
    for (double v : {UnitSystem::si().hbar, UnitSystem::si().k_boltzmann}) {
        // hexfloat text
        std::ostringstream os;
        os << std::hexfloat << v;
        const double back = std::strtod(os.str().c_str(), nullptr);
        CHECK(std::memcmp(&back, &v, sizeof v) == 0);

        // JSON
        const nlohmann::json j = v;
        const double jback = nlohmann::json::parse(j.dump()).get<double>();
        CHECK(std::memcmp(&jback, &v, sizeof v) == 0);
    }
}

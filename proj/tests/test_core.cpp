#include <cmath>
#include <random>

#include <doctest.h>

#include "pam/geometry.hpp"
#include "pam/units.hpp"

using namespace pam;

namespace {
constexpr double deg = units::deg_to_rad;
}

TEST_CASE("braid constants at the paper geometries") {
    // frozen from direct evaluation of a = 3/tan^2, b = 1/sin^2
    const auto c = derive_braid_constants(23.5 * deg);
    CHECK(c.a == doctest::Approx(15.867827226234462).epsilon(1e-12));
    CHECK(c.b == doctest::Approx(6.289275742078155).epsilon(1e-12));
    CHECK(c.eps_max == doctest::Approx(0.3704335350366974).epsilon(1e-12));
    CHECK(c.eps_max / 2.0 == doctest::Approx(0.185).epsilon(2e-3)); // "about 0.185"

    const auto c2 = derive_braid_constants(25.5 * deg);
    CHECK(c2.a - c2.b == doctest::Approx(7.790990125755193).epsilon(1e-12));
    CHECK(c2.eps_max == doctest::Approx(0.3603371568311179).epsilon(1e-12));
}

TEST_CASE("magic angle 54.7356 deg collapses a - b and eps_max") {
    const auto c = derive_braid_constants(54.7356 * deg);
    CHECK(std::abs(c.a - 1.5) < 2e-6);
    CHECK(std::abs(c.b - 1.5) < 2e-6);
    CHECK(std::abs(c.eps_max) < 1e-6);
}

TEST_CASE("braid angle domain") {
    CHECK_THROWS_AS(derive_braid_constants(0.0), DomainError);
    CHECK_THROWS_AS(derive_braid_constants(90.0 * deg), DomainError);
    CHECK_THROWS_AS(derive_braid_constants(-10.0 * deg), DomainError);
    CHECK_THROWS_AS(derive_braid_constants(120.0 * deg), DomainError);
}

TEST_CASE("below the magic angle: a > b, eps_max in (0,1), monotone decreasing") {
    double prev_eps_max = 1.0;
    for (int i = 1; i <= 100; ++i) {
        const double alpha = 54.7 * deg * i / 101.0;
        const auto c = derive_braid_constants(alpha);
        CHECK(c.a > c.b);
        CHECK(c.eps_max > 0.0);
        CHECK(c.eps_max < 1.0);
        CHECK(c.eps_max < prev_eps_max);
        prev_eps_max = c.eps_max;
    }
}

TEST_CASE("geometry caches the braid constants and validates inputs") {
    const auto g = MuscleGeometry::create(0.01, 0.4, 23.5 * deg);
    CHECK(g.a == derive_braid_constants(23.5 * deg).a);
    CHECK(g.cross_section() == doctest::Approx(3.14159265358979e-4).epsilon(1e-12));
    CHECK_THROWS_AS(MuscleGeometry::create(0.0, 0.4, 23.5 * deg), DomainError);
    CHECK_THROWS_AS(MuscleGeometry::create(0.01, -1.0, 23.5 * deg), DomainError);
}

TEST_CASE("unit conversion examples") {
    CHECK(units::convert(5.0, "bar", "Pa") == 5.0e5);
    CHECK(units::convert(145.0, "deg", "rad") == doctest::Approx(2.53072741539178).epsilon(1e-12));
    CHECK(units::convert(40.0, "cm", "m") == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(units::convert(1.0, "kPa", "Pa") == 1000.0);
    CHECK(units::convert(3.0, "N", "N") == 3.0);
    CHECK(units::convert(2.5, "N.m/rad", "N.m/rad") == 2.5);
}

TEST_CASE("unknown unit and dimension mismatch") {
    CHECK_THROWS_AS(units::convert(1.0, "psi", "Pa"), UsageError);
    CHECK_THROWS_AS(units::convert(1.0, "bar", "m"), DomainError);
    CHECK_THROWS_AS(units::convert(1.0, "deg", "N"), DomainError);
}

TEST_CASE("conversion round trips are within 1 ulp") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(1e-6, 1e6);
    auto ulp_ok = [](double x, double y) {
        return y == x || y == std::nextafter(x, 2 * x) || y == std::nextafter(x, 0.0);
    };
    for (int i = 0; i < 1000; ++i) {
        const double v = dist(rng);
        CHECK(ulp_ok(v, units::convert(units::convert(v, "bar", "Pa"), "Pa", "bar")));
        CHECK(ulp_ok(v, units::convert(units::convert(v, "deg", "rad"), "rad", "deg")));
        CHECK(ulp_ok(v, units::convert(units::convert(v, "cm", "m"), "m", "cm")));
        CHECK(ulp_ok(v, units::convert(units::convert(v, "mm", "m"), "m", "mm")));
    }
}

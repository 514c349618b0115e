#include <cmath>
#include <random>

#include <doctest.h>

#include "halfline/errors.hpp"
#include "halfline/polar.hpp"

using halfline::DomainError;
using halfline::half_angle;
using halfline::PolarDecomposition;
using halfline::to_polar;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("axis and diagonal decompositions") {
    auto d = to_polar(1.0, 0.0);
    CHECK(d.modulus == 1.0);
    CHECK(d.angle == 0.0);

    d = to_polar(0.0, 1.0);
    CHECK(d.modulus == 1.0);
    CHECK(d.angle == kPi / 2);  // exactly, via atan2

    d = to_polar(1.0, 1.0);
    CHECK(d.modulus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(d.angle == doctest::Approx(kPi / 4).epsilon(1e-15));

    d = to_polar(3.0, 4.0);
    CHECK(d.modulus == 5.0);
    CHECK(d.angle == doctest::Approx(std::atan2(4.0, 3.0)).epsilon(1e-15));
}

TEST_CASE("round trip reconstructs the inputs") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> dist(1e-6, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const double p = dist(rng);
        const double q = dist(rng);
        const auto d = to_polar(p, q);
        const double p_back = d.modulus * std::cos(d.angle);
        const double q_back = d.modulus * std::sin(d.angle);
        // always faithful at the scale of the pair
        CHECK(std::fabs(p_back - p) <= 1e-14 * d.modulus);
        CHECK(std::fabs(q_back - q) <= 1e-14 * d.modulus);
        // and in relative terms wherever the component is well conditioned
        // (a tiny component against a huge one loses tan(theta) * eps)
        if (p >= 0.01 * d.modulus) CHECK(std::fabs(p_back - p) <= 1e-13 * p);
        if (q >= 0.01 * d.modulus) CHECK(std::fabs(q_back - q) <= 1e-13 * q);
    }
}

TEST_CASE("angle is scale invariant") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(0.01, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double p = dist(rng);
        const double q = dist(rng);
        const double base = to_polar(p, q).angle;
        for (double lambda : {1e-3, 1.0, 1e3}) {
            CHECK(std::fabs(to_polar(lambda * p, lambda * q).angle - base) <=
                  1e-15);
        }
    }
}

TEST_CASE("half-angle values match sin and cos of theta/2") {
    const auto d = to_polar(3.0, 4.0);
    const auto h = half_angle(d, 3.0);
    CHECK(std::fabs(h.sin_half - std::sqrt(1.0 / 5.0)) <= 1e-14);
    CHECK(std::fabs(h.cos_half - std::sqrt(4.0 / 5.0)) <= 1e-14);
    CHECK(std::fabs(h.sin_half - std::sin(d.angle / 2)) <= 1e-14);
    CHECK(std::fabs(h.cos_half - std::cos(d.angle / 2)) <= 1e-14);

    const auto axis = half_angle(to_polar(0.0, 1.0), 0.0);
    CHECK(std::fabs(axis.sin_half - 1.0 / std::sqrt(2.0)) <= 1e-15);
    CHECK(std::fabs(axis.cos_half - 1.0 / std::sqrt(2.0)) <= 1e-15);

    const auto degenerate_angle = half_angle(to_polar(1.0, 0.0), 1.0);
    CHECK(degenerate_angle.sin_half == 0.0);
    CHECK(degenerate_angle.cos_half == 1.0);

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(0.01, 50.0);
    for (int i = 0; i < 500; ++i) {
        const double p = dist(rng);
        const double q = dist(rng);
        const auto dd = to_polar(p, q);
        const auto hh = half_angle(dd, p);
        CHECK(std::fabs(hh.sin_half - std::sin(dd.angle / 2)) <= 1e-14);
        CHECK(std::fabs(hh.cos_half - std::cos(dd.angle / 2)) <= 1e-14);
        CHECK(std::fabs(hh.sin_half * hh.sin_half +
                        hh.cos_half * hh.cos_half - 1.0) <= 1e-15);
    }
}

TEST_CASE("rejects out-of-quadrant and degenerate inputs") {
    CHECK_THROWS_AS(to_polar(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(to_polar(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(to_polar(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(half_angle(PolarDecomposition{1.0, 0.1}, 2.0),
                    DomainError);
    CHECK_THROWS_AS(half_angle(PolarDecomposition{0.0, 0.0}, 0.0),
                    DomainError);
}

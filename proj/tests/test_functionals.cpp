#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "concavekit/functionals.hpp"
#include "concavekit/rng.hpp"
#include "oracles.hpp"

using namespace concavekit;

namespace {
constexpr double kPi = std::numbers::pi;

ConcaveFunction g_theta(double alpha, double theta, std::size_t order = 128) {
    return ConcaveFunction::extremal_g_theta(ConcaveParams(alpha), theta, order);
}
}  // namespace

TEST_CASE("pre_schwarzian_at: closed values") {
    CHECK(std::abs(pre_schwarzian_at(g_theta(2.0, kPi), Complex(0.5, 0.0)) -
                   Complex(4.0, 0.0)) < 1e-10);

    const ConcaveFunction central = ConcaveFunction::from_schwarz(
        ConcaveParams(1.5), SchwarzFunction::constant(0.0), 64);
    CHECK(std::abs(pre_schwarzian_at(central, Complex(0.0, 0.0)) - Complex(2.5, 0.0)) < 1e-12);

    // koebe: f''(0) = 2 a_2 = 4
    CHECK(std::abs(pre_schwarzian_at(g_theta(2.0, 0.0), Complex(0.0, 0.0)) -
                   Complex(4.0, 0.0)) < 1e-12);
}

TEST_CASE("pre_schwarzian_at: guard and closed-form channel") {
    const ConcaveFunction gpi = g_theta(2.0, kPi);
    // beyond the guard the closed form takes over: T = 2/(1-z)
    const Complex z(0.99, 0.0);
    CHECK(std::abs(pre_schwarzian_at(gpi, z) - 2.0 / (1.0 - z)) < 1e-10);

    const ConcaveFunction raw = ConcaveFunction::from_series(
        ConcaveParams(2.0), oracles::half_plane_series(64));
    CHECK_THROWS_AS(pre_schwarzian_at(raw, z), std::domain_error);

    // a vanishing derivative flags corrupted input
    const ConcaveFunction bad = ConcaveFunction::from_series(
        ConcaveParams(2.0), TruncatedSeries::from_list({0.0, 1.0, 5.0}, 16));
    CHECK_THROWS_AS(pre_schwarzian_at(bad, Complex(-0.1, 0.0)), std::runtime_error);
}

TEST_CASE("variability disk: plug-in values") {
    const ConcaveParams params(2.0);
    const DiskRegion at0 = variability_disk(params, Complex(0.0, 0.0));
    CHECK(std::abs(at0.center - Complex(3.0, 0.0)) < 1e-15);
    CHECK(at0.radius == doctest::Approx(1.0));

    const DiskRegion d = variability_disk(params, Complex(0.0, 0.5));
    CHECK(std::abs(d.center - Complex(1.8, 1.4)) < 1e-14);
    CHECK(d.radius == doctest::Approx(1.0));

    for (double alpha : {1.25, 1.5, 2.0}) {
        for (double r : {0.2, 0.5, 0.8}) {
            const DiskRegion dr = variability_disk(ConcaveParams(alpha), Complex(r, 0.0));
            CHECK(std::abs(dr.center - Complex(2.0 * r + alpha + 1.0, 0.0)) < 1e-13);
            CHECK(std::abs(dr.center) + dr.radius ==
                  doctest::Approx(2.0 * r + 1.0 + alpha + (alpha - 1.0)));
        }
    }
}

TEST_CASE("fixed-a disk: plug-in, degenerate and nesting") {
    const ConcaveParams co2(2.0);
    const DiskRegion d = variability_disk_fixed_a(co2, Complex(0.5, 0.0), Complex(0.0, 0.0));
    CHECK(std::abs(d.center - Complex(4.4, 0.0)) < 1e-14);
    CHECK(d.radius == doctest::Approx(0.4));

    CHECK_THROWS_AS(variability_disk_fixed_a(co2, Complex(0.5, 0.0), Complex(1.5, 0.0)),
                    std::domain_error);

    Rng rng(21);
    for (double alpha : {1.25, 2.0}) {
        const ConcaveParams params(alpha);
        for (int i = 0; i < 100; ++i) {
            const Complex z = rng.in_disk(0.8);
            const Complex a = rng.in_disk(1.0);
            const DiskRegion fixed = variability_disk_fixed_a(params, z, a);
            const DiskRegion full = variability_disk(params, z);
            CHECK(std::abs(fixed.center - full.center) + fixed.radius <=
                  full.radius + 1e-9);
        }
        // |a| = 1: collapses onto the boundary point of the full disk
        for (int k = 0; k < 8; ++k) {
            const Complex a(std::cos(0.3 + k), std::sin(0.3 + k));
            const Complex z = rng.in_disk(0.8);
            const DiskRegion fixed = variability_disk_fixed_a(params, z, a);
            CHECK(fixed.radius < 1e-12);
            const Complex point =
                (alpha - 1.0) * (a + std::conj(z)) / (1.0 + a * z);
            CHECK(std::abs(fixed.center - variability_disk(params, z).center - point) < 1e-12);
            CHECK(std::abs(point) == doctest::Approx(alpha - 1.0));
        }
    }
}

TEST_CASE("scaled functional: closed values on the extremal rays") {
    for (double r : {0.25, 0.5}) {
        CHECK(std::abs(scaled_functional(g_theta(2.0, kPi), Complex(r, 0.0)) -
                       Complex(2.0 * (1.0 + r), 0.0)) < 1e-10);
    }
    for (double alpha : {1.25, 1.5, 2.0}) {
        CHECK(std::abs(scaled_functional(g_theta(alpha, 0.0), Complex(0.5, 0.0)) -
                       Complex(2.0 * (alpha + 0.5), 0.0)) < 1e-10);
        const ConcaveFunction g = g_theta(alpha, 1.0);
        CHECK(std::abs(scaled_functional(g, Complex(0.0, 0.0)) - 2.0 * g.coefficient(2)) <
              1e-12);
    }
}

TEST_CASE("norm estimate: extremal values at the cap") {
    const NormEstimate gpi = norm_estimate(g_theta(2.0, kPi), 0.999);
    CHECK(std::abs(gpi.lower - 3.998) < 1e-9);
    CHECK(gpi.lower >= 3.996);
    CHECK(gpi.lower <= 4.0001);
    CHECK(std::abs(gpi.argmax - Complex(0.999, 0.0)) < 1e-9);

    for (double alpha : {1.25, 1.5, 2.0}) {
        const NormEstimate g0 = norm_estimate(g_theta(alpha, 0.0), 0.999);
        CHECK(std::abs(g0.lower - 2.0 * (alpha + 0.999)) < 1e-9);

        const ConcaveFunction central = ConcaveFunction::from_schwarz(
            ConcaveParams(alpha), SchwarzFunction::constant(0.0), 64);
        const NormEstimate ce = norm_estimate(central, 0.999);
        CHECK(std::abs(ce.lower - (alpha + 1.0) * 1.999) < 1e-9);
    }
}

TEST_CASE("norm estimate: lower-bound semantics and guards") {
    const ConcaveFunction g0 = g_theta(1.5, 0.0);
    const NormEstimate coarse = norm_estimate(g0, 0.999, RefinementSpec{8, 16, 1, 8});
    const NormEstimate fine = norm_estimate(g0, 0.999);
    CHECK(coarse.lower <= fine.lower + 1e-12);
    CHECK(fine.lower <= 2.0 * 1.5 + 2.0 + 1e-9);  // never exceeds the true sup

    const ConcaveFunction raw = ConcaveFunction::from_series(
        ConcaveParams(2.0), oracles::half_plane_series(64));
    CHECK_THROWS_AS(norm_estimate(raw, 0.999), std::domain_error);
    CHECK_NOTHROW(norm_estimate(raw, 0.8));
    CHECK_THROWS_AS(norm_estimate(g0, 0.9999), std::domain_error);
}

TEST_CASE("distortion bounds and attainment") {
    const ConcaveParams co2(2.0);
    const auto [lo0, hi0] = distortion_bounds(co2, 0.0);
    CHECK(lo0 == doctest::Approx(1.0));
    CHECK(hi0 == doctest::Approx(1.0));

    const auto [lo, hi] = distortion_bounds(co2, 0.5);
    CHECK(lo == doctest::Approx(4.0 / 27.0).epsilon(1e-12));
    CHECK(hi == doctest::Approx(12.0).epsilon(1e-12));

    const ConcaveFunction g0 = g_theta(2.0, 0.0);
    CHECK(std::abs(std::abs(g0.closed_form_fprime(Complex(0.5, 0.0))) - hi) < 1e-10);
    CHECK(std::abs(std::abs(g0.closed_form_fprime(Complex(-0.5, 0.0))) - lo) < 1e-10);

    Rng rng(31);
    const ConcaveParams params(1.5);
    for (int i = 0; i < 20; ++i) {
        const ConcaveFunction f =
            ConcaveFunction::from_schwarz(params, SchwarzFunction::random(rng), 128);
        for (double r : {0.25, 0.5, 0.75}) {
            const auto [l, h] = distortion_bounds(params, r);
            for (int j = 0; j < 64; ++j) {
                const double t = 2.0 * kPi * j / 64.0;
                const double v = std::abs(evaluate(f.derivative_series(),
                                                   r * Complex(std::cos(t), std::sin(t))));
                CHECK(v >= l - 1e-9);
                CHECK(v <= h + 1e-9);
            }
        }
    }

    CHECK_THROWS_AS(distortion_bounds(co2, 1.0), std::domain_error);
}

TEST_CASE("integral means: quadrature against the coefficient identity") {
    const ConcaveFunction gpi = g_theta(2.0, kPi);
    CHECK(integral_means(gpi, 1.0, 0.0, 64) == doctest::Approx(0.0));

    for (double r : {0.5, 0.7}) {
        const double m2 = integral_means(gpi, 2.0, r, 4096);
        CHECK(std::abs(m2 - r * r / (1.0 - r * r)) < 1e-12);
    }

    // below the critical exponent the means stay bounded
    const ConcaveFunction g0 = g_theta(2.0, 0.0);
    double prev = 0.0;
    for (double r : {0.9, 0.99, 0.999}) {
        std::size_t n_quad = 4096;
        while (static_cast<double>(n_quad) < 20.0 / (1.0 - r)) n_quad *= 2;
        const double m = integral_means(g0, 0.4, r, n_quad);
        if (prev > 0.0) CHECK(m / prev < 2.0);
        prev = m;
    }

    CHECK_THROWS_AS(integral_means(gpi, -0.5, 0.5, 64), std::domain_error);
    const ConcaveFunction raw = ConcaveFunction::from_series(
        ConcaveParams(2.0), oracles::half_plane_series(64));
    CHECK_THROWS_AS(integral_means(raw, 1.0, 0.99, 64), std::domain_error);
}

TEST_CASE("hardy exponent estimate separates bounded from blow-up behavior") {
    const std::vector<double> radii{0.9, 0.99, 0.999, 0.9999};
    const ConcaveFunction g0 = g_theta(2.0, 0.0);

    const double beta_bounded = hardy_exponent_estimate(g0, 0.4, radii);
    CHECK(std::abs(beta_bounded) < 0.1);

    const double beta_blowup = hardy_exponent_estimate(g0, 0.7, radii);
    CHECK(beta_blowup > 0.3);
    CHECK(beta_blowup < 0.5);

    const ConcaveFunction gpi = g_theta(2.0, kPi);
    CHECK(std::abs(hardy_exponent_estimate(gpi, 0.5, radii)) < 0.1);

    CHECK_THROWS_AS(hardy_exponent_estimate(g0, 0.4, {0.9, 0.99}), std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "concavekit/concave_function.hpp"
#include "concavekit/rng.hpp"
#include "oracles.hpp"

using namespace concavekit;
using oracles::max_abs_diff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("ConcaveParams admits only (1, 2]") {
    CHECK_THROWS_AS(ConcaveParams(1.0), std::domain_error);
    CHECK_THROWS_AS(ConcaveParams(2.0001), std::domain_error);
    CHECK_THROWS_AS(ConcaveParams(0.5), std::domain_error);
    CHECK_NOTHROW(ConcaveParams(1.0001));
    CHECK_NOTHROW(ConcaveParams(2.0));
}

TEST_CASE("from_schwarz with vanishing omega gives the central member") {
    for (double alpha : {1.25, 1.5, 2.0}) {
        const ConcaveParams params(alpha);
        const ConcaveFunction f =
            ConcaveFunction::from_schwarz(params, SchwarzFunction::constant(0.0), 48);
        CHECK(max_abs_diff(f.series(), oracles::central_member_series(alpha, 48)) < 1e-12);
        CHECK(max_abs_diff(f.derivative_series(),
                           oracles::binomial_series(-(alpha + 1.0), Complex(-1.0, 0.0), 47)) <
              1e-12);
        CHECK(std::abs(f.coefficient(2) - Complex(0.5 * (alpha + 1.0), 0.0)) < 1e-13);
    }
}

TEST_CASE("from_schwarz constant extremes") {
    const ConcaveParams co2(2.0);
    const ConcaveFunction gpi =
        ConcaveFunction::from_schwarz(co2, SchwarzFunction::constant(-1.0), 48);
    CHECK(max_abs_diff(gpi.series(), oracles::half_plane_series(48)) < 1e-10);

    const ConcaveFunction g0 =
        ConcaveFunction::from_schwarz(co2, SchwarzFunction::constant(1.0), 48);
    CHECK(max_abs_diff(g0.series(), oracles::koebe_series(48)) < 1e-10);
}

TEST_CASE("extremal family closed forms") {
    const ConcaveParams co2(2.0);
    CHECK(max_abs_diff(ConcaveFunction::extremal_g_theta(co2, kPi, 32).series(),
                       oracles::half_plane_series(32)) < 1e-12);
    CHECK(max_abs_diff(ConcaveFunction::extremal_g_theta(co2, 0.0, 32).series(),
                       oracles::koebe_series(32)) < 1e-12);

    const ConcaveParams params(1.5);
    for (double theta : {0.0, kPi / 2.0, kPi}) {
        const ConcaveFunction g = ConcaveFunction::extremal_g_theta(params, theta, 16);
        const Complex expected =
            0.5 * (params.alpha + 1.0 +
                   (params.alpha - 1.0) * Complex(std::cos(theta), std::sin(theta)));
        CHECK(std::abs(g.coefficient(2) - expected) < 1e-12);
    }
}

TEST_CASE("extremal family agrees with the schwarz construction") {
    for (double alpha : {1.25, 1.5, 2.0}) {
        const ConcaveParams params(alpha);
        for (int k = 0; k < 8; ++k) {
            const double theta = 2.0 * kPi * k / 8.0;
            const ConcaveFunction a = ConcaveFunction::extremal_g_theta(params, theta, 64);
            const ConcaveFunction b = ConcaveFunction::from_schwarz(
                params, SchwarzFunction::constant(Complex(std::cos(theta), std::sin(theta))),
                64);
            CHECK(max_abs_diff(a.series(), b.series()) < 1e-10);
        }
    }
}

TEST_CASE("membership: the half-plane map passes with the predicted floor") {
    const ConcaveFunction gpi = ConcaveFunction::extremal_g_theta(ConcaveParams(2.0), kPi, 128);
    const VerificationReport rep = membership_test(gpi);
    CHECK(rep.status == Status::Pass);
    // Re (1+z)/(1-z) >= (1-r)/(1+r) on |z| <= r; the slack absorbs the
    // series tail of f'' at the guard radius
    CHECK(rep.margin >= (1.0 - 0.85) / (1.0 + 0.85) - 1e-3);
}

TEST_CASE("membership: random members pass, ad-hoc outsiders fail") {
    Rng rng(2024);
    for (double alpha : {1.25, 2.0}) {
        const ConcaveParams params(alpha);
        for (int i = 0; i < 20; ++i) {
            const ConcaveFunction f =
                ConcaveFunction::from_schwarz(params, SchwarzFunction::random(rng), 128);
            CHECK(membership_test(f).status == Status::Pass);
        }
    }
    const ConcaveFunction bad = ConcaveFunction::from_series(
        ConcaveParams(2.0), TruncatedSeries::from_list({0.0, 1.0, 5.0}, 64));
    CHECK(membership_test(bad).status == Status::Fail);
}

TEST_CASE("schwarz maps stay bounded and their series match pointwise values") {
    Rng rng(99);
    for (int i = 0; i < 20; ++i) {
        const SchwarzFunction w = SchwarzFunction::random(rng);
        const TruncatedSeries s = w.series(160);
        for (int j = 0; j < 8; ++j) {
            const Complex z = rng.in_disk(0.6);
            CHECK(std::abs(w.value_at(z)) <= 1.0 + 1e-12);
            CHECK(std::abs(evaluate(s, z) - w.value_at(z)) < 1e-11);
        }
    }
    const Complex a(0.3, -0.4);
    const SchwarzFunction pinned = SchwarzFunction::random_pinned(a, rng);
    CHECK(std::abs(pinned.at_origin() - a) == 0.0);
    CHECK(std::abs(evaluate(pinned.series(160), Complex(0.5, 0.1)) -
                   pinned.value_at(Complex(0.5, 0.1))) < 1e-11);

    CHECK_THROWS_AS(
        SchwarzFunction::from_series(TruncatedSeries::monomial(1, Complex(1.1, 0.0), 8)),
        std::domain_error);
    CHECK_NOTHROW(
        SchwarzFunction::from_series(TruncatedSeries::monomial(1, Complex(0.99, 0.0), 8)));
}

TEST_CASE("kaplan signature of the named members") {
    const ConcaveParams co2(2.0);
    const TruncatedSeries s_central = kaplan_signature(
        ConcaveFunction::from_schwarz(co2, SchwarzFunction::constant(0.0), 32));
    for (std::size_t n = 1; n <= s_central.order(); ++n) {
        CHECK(std::abs(s_central[n]) < 1e-12);
    }

    const TruncatedSeries s0 =
        kaplan_signature(ConcaveFunction::extremal_g_theta(co2, 0.0, 32));
    CHECK(max_abs_diff(s0, TruncatedSeries::from_list({1.0, 1.0}, s0.order())) < 1e-12);

    const TruncatedSeries spi =
        kaplan_signature(ConcaveFunction::extremal_g_theta(co2, kPi, 32));
    CHECK(max_abs_diff(spi, TruncatedSeries::from_list({1.0, -1.0}, spi.order())) < 1e-12);
    CHECK(std::abs(spi[1] + Complex(1.0, 0.0)) < 1e-12);  // b_1 = -1, |b_1| = alpha-1
}

TEST_CASE("from_kaplan reproduces the named members and round-trips") {
    const ConcaveParams co2(2.0);

    const ConcaveFunction central = ConcaveFunction::from_kaplan(co2, TruncatedSeries::one(32));
    CHECK(max_abs_diff(central.series(), oracles::central_member_series(2.0, 33)) < 1e-12);

    const ConcaveFunction koebe =
        ConcaveFunction::from_kaplan(co2, TruncatedSeries::from_list({1.0, 1.0}, 32));
    CHECK(max_abs_diff(koebe.series(), oracles::koebe_series(33)) < 1e-12);

    const ConcaveFunction gpi =
        ConcaveFunction::from_kaplan(co2, TruncatedSeries::from_list({1.0, -1.0}, 32));
    CHECK(max_abs_diff(gpi.series(), oracles::half_plane_series(33)) < 1e-12);

    Rng rng(5);
    for (double alpha : {1.25, 1.5, 2.0}) {
        const ConcaveParams params(alpha);
        const ConcaveFunction f =
            ConcaveFunction::from_schwarz(params, SchwarzFunction::random(rng), 64);
        const TruncatedSeries s = kaplan_signature(f);
        const ConcaveFunction back = ConcaveFunction::from_kaplan(params, s);
        CHECK(max_abs_diff(back.series(), f.series()) < 1e-11);
        CHECK(max_abs_diff(kaplan_signature(back), s) < 1e-11);
    }

    CHECK_THROWS_AS(
        ConcaveFunction::from_kaplan(co2, TruncatedSeries::constant(Complex(2.0, 0.0), 16)),
        std::invalid_argument);
}

TEST_CASE("lambda transform of the classical fixtures") {
    // order 128 so the membership grid at the guard radius sees a clean tail
    const std::vector<StarlikeFixture> fixtures = standard_starlike_fixtures(128);

    for (double alpha : {1.25, 1.5, 2.0}) {
        const ConcaveParams params(alpha);

        // identity input: (t/phi)^((alpha-1)/2) == 1
        const ConcaveFunction via_id = ConcaveFunction::lambda_transform(params, fixtures[0]);
        CHECK(max_abs_diff(via_id.series(), oracles::central_member_series(alpha, 40)) < 1e-11);

        // koebe input collapses to the half-plane map for every alpha
        const ConcaveFunction via_koebe = ConcaveFunction::lambda_transform(params, fixtures[2]);
        CHECK(max_abs_diff(via_koebe.series(), oracles::half_plane_series(40)) < 1e-10);

        for (const StarlikeFixture& fx : fixtures) {
            const ConcaveFunction f = ConcaveFunction::lambda_transform(params, fx);
            CHECK(membership_test(f, PolarGrid{0.1, 0.85, 8, 64}).status == Status::Pass);
        }

        // inverse: phi = z s^{2/(1-alpha)}.  Extracting the small signature
        // from the large derivative coefficients cancels ~n^3 eps, so the
        // 1e-10 comparison runs at a moderate order.
        for (const StarlikeFixture& fx : standard_starlike_fixtures(64)) {
            const ConcaveFunction f = ConcaveFunction::lambda_transform(params, fx);
            const TruncatedSeries s = kaplan_signature(f);
            const TruncatedSeries phi_back =
                pow_real(s, 2.0 / (1.0 - alpha)).shifted_up().truncated(s.order() + 1);
            CHECK(max_abs_diff(phi_back, fx.series) < 1e-10);
        }
    }

    // the alpha=2 half-plane fixture gives f' = (1-z)^{-5/2}
    const ConcaveFunction f =
        ConcaveFunction::lambda_transform(ConcaveParams(2.0), fixtures[1]);
    CHECK(max_abs_diff(f.derivative_series(),
                       oracles::binomial_series(-2.5, Complex(-1.0, 0.0), 127)) < 1e-11);
}

TEST_CASE("starlike fixture validation") {
    CHECK_THROWS_AS(
        make_starlike_fixture("bad-norm", TruncatedSeries::from_list({0.0, 2.0}, 8)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        make_starlike_fixture("not-starlike",
                              TruncatedSeries::from_list({0.0, 1.0, -2.0}, 8)),
        std::invalid_argument);
}

TEST_CASE("raw series wrapper enforces normalization only") {
    const ConcaveParams params(1.5);
    CHECK_THROWS_AS(
        ConcaveFunction::from_series(params, TruncatedSeries::from_list({0.1, 1.0}, 8)),
        std::invalid_argument);
    CHECK_NOTHROW(
        ConcaveFunction::from_series(params, TruncatedSeries::from_list({0.0, 1.0, 9.0}, 8)));
}

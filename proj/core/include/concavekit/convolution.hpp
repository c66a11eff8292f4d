#pragma once

#include <optional>

#include "concavekit/concave_function.hpp"
#include "concavekit/verification.hpp"

namespace concavekit {

/// A point of the unit circle used as a test parameter.
struct UnimodularParam {
    Complex value{1.0, 0.0};

    explicit UnimodularParam(Complex x);
    static UnimodularParam from_angle(double t);
};

/// The quadratic map h(z) = z + c z^2 whose image closure hosts the
/// third-coefficient functional.  |c| < 1/2 keeps h' nonvanishing, so the
/// image boundary is a Jordan curve and winding numbers are well defined.
struct RegionQuadratic {
    Complex c{0.0, 0.0};
};

RegionQuadratic region_for_alpha(double alpha);  // c = (alpha-2)/(2(alpha+1))

enum class RegionLocation { Inside, Boundary, Outside };

std::string to_string(RegionLocation loc);

/// Series sum A_n z^n of the two-kernel convolution test:
/// A_0 = alpha-1, A_n = (alpha-n-1-n x)(n+1) a_{n+1} + [n+1+(n+alpha) x] n a_n.
TruncatedSeries conv_coeffs_A(const ConcaveParams& params, const TruncatedSeries& f,
                              const UnimodularParam& x);

/// Desk-scale nonvanishing certificate on |z| <= r_test: passes when the
/// sampled minimum of the truncated sum exceeds the tail bound
/// G * sum_{n>N} n^2 r^n.  When the tail bound itself blocks the verdict the
/// result is inconclusive (raise the order); a sampled value at the tail
/// floor is a failure.
VerificationReport nonvanish_test(const TruncatedSeries& series, double r_test = 0.5,
                                  std::optional<double> growth_bound = std::nullopt);

/// Half-plane class test: Re(z s'/s) < lambda/2 on the grid, lambda > 0.
/// A vanishing s on the grid fails with its location.
VerificationReport pi_lambda_test(const TruncatedSeries& s, double lambda,
                                  const PolarGrid& grid = PolarGrid{});

/// Signature convolution test: z s'(z) + (1-alpha)/(x+1) s(z) must not
/// vanish (x != -1).  The linear form is cross-checked against the explicit
/// termwise products with both kernels before testing.
VerificationReport s_conv_test(const TruncatedSeries& s, const ConcaveParams& params,
                               const UnimodularParam& x, double r_test = 0.5);

/// Signature coefficients from the Taylor data of f alone:
/// b_n = sum_{k=0}^{n} (-1)^{n-k} C(alpha+1, n-k) (k+1) a_{k+1}.
TruncatedSeries b_coeffs(const ConcaveParams& params, const TruncatedSeries& f);

/// Checks |b_n| <= (alpha-1)/n for 1 <= n <= n_max, with the two low-order
/// special cases reported separately.
VerificationReport coeff_inequality_check(const ConcaveParams& params,
                                          const TruncatedSeries& f, std::size_t n_max);

/// The member whose signature is (1 - e^{i theta} z^k)^{(alpha-1)/k}; attains
/// |b_k| = (alpha-1)/k with b_m = 0 for m < k.
ConcaveFunction extremal_kaplan(const ConcaveParams& params, double theta, int k,
                                std::size_t order);

/// A(phi_3, phi_2, alpha) = -[phi_3 - (alpha+1)/4 phi_2^2 + (alpha+1) phi_2]
///                          / (2(alpha+1)),
/// cross-checked against the third coefficient of the transformed member.
Complex a_functional(const ConcaveParams& params, const StarlikeFixture& phi);

/// Same value from raw inputs, no admissibility checks; the opt-in
/// parameter-range experiment goes through here.
Complex a_functional_raw(double alpha, Complex phi2, Complex phi3);

/// Winding-number location of p relative to the image closure of h on 4096
/// boundary samples; points within 1e-6 of the sampled curve are Boundary.
RegionLocation region_membership(const RegionQuadratic& region, Complex p);

}  // namespace concavekit

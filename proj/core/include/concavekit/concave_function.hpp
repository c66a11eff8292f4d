#pragma once

#include <functional>
#include <optional>
#include <string>

#include "concavekit/schwarz.hpp"
#include "concavekit/truncated_series.hpp"
#include "concavekit/verification.hpp"

namespace concavekit {

/// Opening-angle parameter.  Only alpha in (1, 2] is admissible; the value
/// alpha = 1 is reachable only through the half-plane map (theta = pi in the
/// extremal family) and is not a class of its own here.
struct ConcaveParams {
    double alpha;

    explicit ConcaveParams(double a);
};

/// Normalized starlike map shipped as a test fixture: the truncated series
/// together with its second and third Taylor coefficients.  An optional
/// exact z*phi'/phi evaluator lets validation sample close to the boundary.
struct StarlikeFixture {
    std::string name;
    TruncatedSeries series;
    Complex phi2{0.0, 0.0};
    Complex phi3{0.0, 0.0};
    std::function<Complex(Complex)> log_derivative;  // z phi'(z)/phi(z), may be empty
};

/// The four classical fixtures: z, z/(1-z), z/(1-z)^2, z/(1-z^2).
std::vector<StarlikeFixture> standard_starlike_fixtures(std::size_t order);

/// Validates normalization and the starlike condition Re(z phi'/phi) > 0 on
/// a sampling grid; throws on violation.
StarlikeFixture make_starlike_fixture(std::string name, TruncatedSeries series,
                                      std::function<Complex(Complex)> log_derivative = {});

/// A member of the concave class: normalized series for f and f', the
/// opening-angle parameter, and a record of how it was built.  Construction
/// routes that can evaluate f, f' or f''/f' in closed form anywhere in the
/// disk expose those channels; equality cases live near the boundary where
/// the truncated series cannot reach.
class ConcaveFunction {
public:
    /// Solves the half-plane characterization for a given Schwarz map:
    /// z f''/f' = (alpha+1)/2 (1+z)/(1-z) - 1 - (alpha-1)/2 P(z) with
    /// P = (1 - z omega)/(1 + z omega), then f' = exp(integral), f = integral.
    static ConcaveFunction from_schwarz(const ConcaveParams& params,
                                        const SchwarzFunction& omega,
                                        std::size_t order);

    /// The extremal family: f' = (1 + e^{i theta} z)^{alpha-1} / (1-z)^{alpha+1}.
    /// Matches from_schwarz(omega == e^{i theta}) coefficient for coefficient.
    static ConcaveFunction extremal_g_theta(const ConcaveParams& params, double theta,
                                            std::size_t order);

    /// f' = s(z)/(1-z)^{alpha+1} for a polynomial signature s with s(0) = 1.
    /// Caller guarantees s lies in the half-plane class of index alpha-1;
    /// only the normalization is checked here.
    static ConcaveFunction from_kaplan(const ConcaveParams& params,
                                       const TruncatedSeries& s);

    /// f' = (1-z)^{-(alpha+1)} (z/phi)^{(alpha-1)/2} for a starlike phi.
    static ConcaveFunction lambda_transform(const ConcaveParams& params,
                                            const StarlikeFixture& phi);

    /// Ad-hoc wrapper around a raw normalized series (a_0 = 0, a_1 = 1).
    /// No membership invariants are checked: this is the entry point for
    /// probing non-members.
    static ConcaveFunction from_series(const ConcaveParams& params,
                                       const TruncatedSeries& f);

    const ConcaveParams& params() const { return params_; }
    std::size_t order() const { return f_.order(); }
    const TruncatedSeries& series() const { return f_; }
    const TruncatedSeries& derivative_series() const { return fprime_; }
    const TruncatedSeries& second_derivative_series() const { return fsecond_; }
    Complex coefficient(std::size_t n) const { return f_[n]; }
    const std::string& provenance() const { return provenance_; }

    bool has_closed_form_f() const { return static_cast<bool>(closed_f_); }
    bool has_closed_form_fprime() const { return static_cast<bool>(closed_fprime_); }
    bool has_closed_form_pre_schwarzian() const { return static_cast<bool>(closed_T_); }
    Complex closed_form_f(Complex z) const;
    Complex closed_form_fprime(Complex z) const;
    Complex closed_form_pre_schwarzian(Complex z) const;

private:
    ConcaveFunction(ConcaveParams params, TruncatedSeries f, TruncatedSeries fprime,
                    std::string provenance);

    ConcaveParams params_;
    TruncatedSeries f_;
    TruncatedSeries fprime_;
    TruncatedSeries fsecond_;
    std::string provenance_;
    std::function<Complex(Complex)> closed_f_;
    std::function<Complex(Complex)> closed_fprime_;
    std::function<Complex(Complex)> closed_T_;
};

/// Samples Re P_f over the grid; passes when the minimum stays above -1e-9.
/// P_f = 2/(alpha-1) [ (alpha+1)/2 (1+z)/(1-z) - 1 - z f''/f' ].  A vanishing
/// f' on the grid is an automatic failure (members never have one).
VerificationReport membership_test(const ConcaveFunction& f,
                                   const PolarGrid& grid = PolarGrid{},
                                   double tol = 1e-9);

/// s(z) = (1-z)^{alpha+1} f'(z); the signature linking the concave class to
/// the half-plane class of index alpha-1.
TruncatedSeries kaplan_signature(const ConcaveFunction& f);

}  // namespace concavekit

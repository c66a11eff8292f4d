#include "concavekit/concave_function.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace concavekit {

namespace {

constexpr double kNearMinusOne = 1e-8;  // |1 + e^{i theta}| switch threshold

Complex polar_unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// (1+z)/(1-z) = 1 + 2z + 2z^2 + ...
TruncatedSeries half_plane_series(std::size_t order) {
    std::vector<Complex> c(order + 1, Complex(2.0, 0.0));
    c[0] = Complex(1.0, 0.0);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries one_minus_z(std::size_t order) {
    return TruncatedSeries::from_list({Complex(1.0, 0.0), Complex(-1.0, 0.0)}, order);
}

/// z/(1-z) = z + z^2 + ...
TruncatedSeries half_plane_map(std::size_t order) {
    std::vector<Complex> c(order + 1, Complex(1.0, 0.0));
    c[0] = Complex(0.0, 0.0);
    return TruncatedSeries(std::move(c));
}

void check_a2_disk(const ConcaveParams& params, const TruncatedSeries& f) {
    const double alpha = params.alpha;
    const double dev = std::abs(f[2] - Complex(0.5 * (alpha + 1.0), 0.0));
    if (dev > 0.5 * (alpha - 1.0) + 1e-9) {
        throw std::runtime_error(
            "concave construction: a_2 left its disk of variability; input is corrupt");
    }
}

double max_coeff_deviation(const TruncatedSeries& a, const TruncatedSeries& b) {
    double m = 0.0;
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k <= n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

/// Closed-form series of the extremal family member, used to cross-check the
/// integration route.  Near theta = pi the normalizing factor 1 + e^{i theta}
/// nearly cancels, so a two-term expansion around the half-plane map is used.
TruncatedSeries g_theta_closed_series(double alpha, Complex c, std::size_t order) {
    const Complex one_plus_c = 1.0 + c;
    if (std::abs(one_plus_c) < kNearMinusOne) {
        const TruncatedSeries u = half_plane_map(order);
        return u + (one_plus_c * (0.5 * (alpha - 1.0))) * mul(u, u);
    }
    const TruncatedSeries w =
        div(TruncatedSeries::from_list({Complex(1.0, 0.0), c}, order), one_minus_z(order));
    return (1.0 / (alpha * one_plus_c)) * (pow_real(w, alpha) - Complex(1.0, 0.0));
}

}  // namespace

ConcaveParams::ConcaveParams(double a) : alpha(a) {
    if (!(a > 1.0) || !(a <= 2.0)) {
        throw std::domain_error("ConcaveParams: alpha must lie in (1, 2]");
    }
}

ConcaveFunction::ConcaveFunction(ConcaveParams params, TruncatedSeries f,
                                 TruncatedSeries fprime, std::string provenance)
    : params_(params),
      f_(std::move(f)),
      fprime_(std::move(fprime)),
      fsecond_(differentiate(fprime_)),
      provenance_(std::move(provenance)) {
    if (f_.order() < 2) {
        throw std::invalid_argument("ConcaveFunction: order must be at least 2");
    }
    if (std::abs(f_[0]) > 1e-12 || std::abs(f_[1] - Complex(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("ConcaveFunction: series not normalized (f(0)=0, f'(0)=1)");
    }
}

ConcaveFunction ConcaveFunction::from_schwarz(const ConcaveParams& params,
                                              const SchwarzFunction& omega,
                                              std::size_t order) {
    if (order < 3) throw std::invalid_argument("from_schwarz: order must be at least 3");
    const double alpha = params.alpha;
    const std::size_t m = order - 1;  // order of f'

    const TruncatedSeries zw = omega.series(m).shifted_up().truncated(m);
    const TruncatedSeries p =
        div(TruncatedSeries::one(m) - zw, TruncatedSeries::one(m) + zw);
    TruncatedSeries rhs = 0.5 * (alpha + 1.0) * half_plane_series(m) -
                          0.5 * (alpha - 1.0) * p - Complex(1.0, 0.0);
    if (std::abs(rhs[0]) > 1e-12) {
        throw std::runtime_error(
            "from_schwarz: constant term of z f''/f' failed to cancel");
    }
    const TruncatedSeries t = rhs.shifted_down().truncated(m);    // f''/f'
    const TruncatedSeries fprime = exp(integrate_from_zero(t));   // f'(0) = 1 exactly
    TruncatedSeries f = integrate_from_zero(fprime.truncated(order));

    std::string label = "schwarz";
    if (omega.kind() == SchwarzFunction::Kind::Constant) label = "schwarz-constant";

    ConcaveFunction g(params, std::move(f), fprime, std::move(label));
    check_a2_disk(params, g.f_);

    // Pointwise f''/f' is exact wherever omega is: the representation from
    // the half-plane characterization needs only omega(z).
    SchwarzFunction w_copy = omega;
    g.closed_T_ = [alpha, w_copy](Complex z) {
        const Complex w = w_copy.value_at(z);
        return ((alpha - 1.0) * w + (alpha + 1.0) + 2.0 * z * w) /
               ((1.0 - z) * (1.0 + z * w));
    };
    if (omega.kind() == SchwarzFunction::Kind::Constant) {
        const Complex c = omega.at_origin();
        g.closed_fprime_ = [alpha, c](Complex z) {
            return std::pow(1.0 + c * z, alpha - 1.0) / std::pow(1.0 - z, alpha + 1.0);
        };
        g.closed_f_ = [alpha, c](Complex z) {
            const Complex one_plus_c = 1.0 + c;
            if (std::abs(one_plus_c) < kNearMinusOne) {
                const Complex u = z / (1.0 - z);
                return u + one_plus_c * (0.5 * (alpha - 1.0)) * u * u;
            }
            return (std::pow((1.0 + c * z) / (1.0 - z), alpha) - 1.0) /
                   (alpha * one_plus_c);
        };
    }
    return g;
}

ConcaveFunction ConcaveFunction::extremal_g_theta(const ConcaveParams& params,
                                                  double theta, std::size_t order) {
    if (order < 3) throw std::invalid_argument("extremal_g_theta: order must be at least 3");
    const double alpha = params.alpha;
    Complex c = polar_unit(theta);
    const std::size_t m = order - 1;

    TruncatedSeries fprime(m);
    if (std::abs(1.0 + c) < kNearMinusOne) {
        // the half-plane member z/(1-z): build f' = (1-z)^{-2} with exact
        // integer coefficients rather than dragging the e^{i pi} dust along
        c = Complex(-1.0, 0.0);
        std::vector<Complex> fp(m + 1);
        for (std::size_t n = 0; n <= m; ++n) fp[n] = Complex(static_cast<double>(n + 1), 0.0);
        fprime = TruncatedSeries(std::move(fp));
    } else {
        fprime =
            mul(pow_real(TruncatedSeries::from_list({Complex(1.0, 0.0), c}, m), alpha - 1.0),
                pow_real(one_minus_z(m), -(alpha + 1.0)));
    }
    TruncatedSeries f = integrate_from_zero(fprime.truncated(order));

    if (max_coeff_deviation(f, g_theta_closed_series(alpha, c, order)) > 1e-10) {
        throw std::runtime_error("extremal_g_theta: integration route disagrees with the closed form");
    }

    std::ostringstream label;
    label << "g_theta(" << theta << ")";
    ConcaveFunction g(params, std::move(f), fprime, label.str());
    check_a2_disk(params, g.f_);

    g.closed_fprime_ = [alpha, c](Complex z) {
        return std::pow(1.0 + c * z, alpha - 1.0) / std::pow(1.0 - z, alpha + 1.0);
    };
    g.closed_T_ = [alpha, c](Complex z) {
        return (alpha - 1.0) * c / (1.0 + c * z) + (alpha + 1.0) / (1.0 - z);
    };
    g.closed_f_ = [alpha, c](Complex z) {
        const Complex one_plus_c = 1.0 + c;
        if (std::abs(one_plus_c) < kNearMinusOne) {
            const Complex u = z / (1.0 - z);
            return u + one_plus_c * (0.5 * (alpha - 1.0)) * u * u;
        }
        return (std::pow((1.0 + c * z) / (1.0 - z), alpha) - 1.0) / (alpha * one_plus_c);
    };
    return g;
}

ConcaveFunction ConcaveFunction::from_kaplan(const ConcaveParams& params,
                                             const TruncatedSeries& s) {
    if (std::abs(s[0] - Complex(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("from_kaplan: signature must satisfy s(0) = 1");
    }
    const double alpha = params.alpha;
    const std::size_t m = s.order();
    TruncatedSeries sig = (1.0 / s[0]) * s;  // makes s_0 == 1 exactly
    const TruncatedSeries fprime =
        mul_compensated(sig, pow_real(one_minus_z(m), -(alpha + 1.0)));
    TruncatedSeries f = integrate_from_zero(fprime.truncated(m + 1));

    ConcaveFunction g(params, std::move(f), fprime, "kaplan");
    const TruncatedSeries sprime = differentiate(sig);
    g.closed_fprime_ = [alpha, sig](Complex z) {
        return evaluate_polynomial(sig, z) / std::pow(1.0 - z, alpha + 1.0);
    };
    g.closed_T_ = [alpha, sig, sprime](Complex z) {
        return evaluate_polynomial(sprime, z) / evaluate_polynomial(sig, z) +
               (alpha + 1.0) / (1.0 - z);
    };
    return g;
}

ConcaveFunction ConcaveFunction::lambda_transform(const ConcaveParams& params,
                                                  const StarlikeFixture& phi) {
    const TruncatedSeries& ps = phi.series;
    if (ps.order() < 4) throw std::invalid_argument("lambda_transform: fixture order too small");
    if (std::abs(ps[0]) > 1e-12 || std::abs(ps[1] - Complex(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("lambda_transform: fixture is not normalized");
    }
    const double alpha = params.alpha;
    const std::size_t m = ps.order() - 1;
    const TruncatedSeries z_over_phi = div(TruncatedSeries::one(m), ps.shifted_down());
    const TruncatedSeries fprime = mul(pow_real(one_minus_z(m), -(alpha + 1.0)),
                                       pow_real(z_over_phi, 0.5 * (alpha - 1.0)));
    TruncatedSeries f = integrate_from_zero(fprime.truncated(m + 1));
    return ConcaveFunction(params, std::move(f), fprime, "lambda(" + phi.name + ")");
}

ConcaveFunction ConcaveFunction::from_series(const ConcaveParams& params,
                                             const TruncatedSeries& f) {
    return ConcaveFunction(params, f, differentiate(f), "raw-series");
}

Complex ConcaveFunction::closed_form_f(Complex z) const {
    if (!closed_f_) throw std::logic_error("no closed form for f on this provenance");
    return closed_f_(z);
}

Complex ConcaveFunction::closed_form_fprime(Complex z) const {
    if (!closed_fprime_) throw std::logic_error("no closed form for f' on this provenance");
    return closed_fprime_(z);
}

Complex ConcaveFunction::closed_form_pre_schwarzian(Complex z) const {
    if (!closed_T_) throw std::logic_error("no closed form for f''/f' on this provenance");
    return closed_T_(z);
}

VerificationReport membership_test(const ConcaveFunction& f, const PolarGrid& grid,
                                   double tol) {
    const double alpha = f.params().alpha;
    VerificationReport report;
    report.suite_id = "membership";

    double min_re = std::numeric_limits<double>::infinity();
    Complex argmin{0.0, 0.0};
    std::size_t n = 0;
    for (double r : grid.radii()) {
        for (double t : grid.angles()) {
            const Complex z = r * polar_unit(t);
            const Complex fp = evaluate(f.derivative_series(), z, grid.r_max + 1e-12);
            ++n;
            if (std::abs(fp) <= 1e-12) {
                // members have non-vanishing derivative; this settles it
                record_sample(report, "derivative-vanished", -1.0, z);
                report.n_samples = n;
                report.status = Status::Fail;
                return report;
            }
            const Complex fs = evaluate(f.second_derivative_series(), z, grid.r_max + 1e-12);
            const Complex p = (2.0 / (alpha - 1.0)) *
                              (0.5 * (alpha + 1.0) * (1.0 + z) / (1.0 - z) - 1.0 -
                               z * fs / fp);
            if (p.real() < min_re) {
                min_re = p.real();
                argmin = z;
            }
        }
    }
    record_sample(report, "min-re-P", min_re + tol, argmin);
    report.n_samples = n;
    finalize_status(report);
    return report;
}

TruncatedSeries kaplan_signature(const ConcaveFunction& f) {
    // large derivative coefficients cancel down to |s_n| <= (alpha-1)/n;
    // compensated accumulation keeps the cancellation clean
    const TruncatedSeries& fp = f.derivative_series();
    return mul_compensated(pow_real(one_minus_z(fp.order()), f.params().alpha + 1.0), fp);
}

StarlikeFixture make_starlike_fixture(std::string name, TruncatedSeries series,
                                      std::function<Complex(Complex)> log_derivative) {
    if (std::abs(series[0]) > 1e-12 || std::abs(series[1] - Complex(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("starlike fixture: series not normalized");
    }
    const std::size_t n_angles = 256;
    const double r_top = log_derivative ? 0.95 : kDefaultEvalRadius;
    const TruncatedSeries deriv = differentiate(series);
    // interior radii matter: a zero of phi inside the disk never shows on
    // the outermost circle alone
    for (int ri = 1; ri <= 8; ++ri) {
        const double r = r_top * static_cast<double>(ri) / 8.0;
        for (std::size_t j = 0; j < n_angles; ++j) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(j) /
                             static_cast<double>(n_angles);
            const Complex z = r * polar_unit(t);
            Complex q;
            if (log_derivative) {
                q = log_derivative(z);
            } else {
                const Complex pv = evaluate(series, z, r_top + 1e-12);
                if (std::abs(pv) <= 1e-12) {
                    throw std::invalid_argument("starlike fixture: phi vanishes away from 0");
                }
                q = z * evaluate(deriv, z, r_top + 1e-12) / pv;
            }
            if (q.real() <= -1e-9) {
                throw std::invalid_argument("starlike fixture: Re(z phi'/phi) <= 0 on the disk");
            }
        }
    }
    const Complex p2 = series[2];
    const Complex p3 = series[3];
    return StarlikeFixture{std::move(name), std::move(series), p2, p3,
                           std::move(log_derivative)};
}

std::vector<StarlikeFixture> standard_starlike_fixtures(std::size_t order) {
    std::vector<StarlikeFixture> out;

    out.push_back(make_starlike_fixture(
        "identity", TruncatedSeries::monomial(1, Complex(1.0, 0.0), order),
        [](Complex) { return Complex(1.0, 0.0); }));

    out.push_back(make_starlike_fixture(
        "half-plane", half_plane_map(order),
        [](Complex z) { return 1.0 / (1.0 - z); }));

    {
        std::vector<Complex> koebe(order + 1);
        for (std::size_t n = 0; n <= order; ++n) koebe[n] = Complex(static_cast<double>(n), 0.0);
        out.push_back(make_starlike_fixture(
            "koebe", TruncatedSeries(std::move(koebe)),
            [](Complex z) { return (1.0 + z) / (1.0 - z); }));
    }

    {
        std::vector<Complex> c(order + 1, Complex(0.0, 0.0));
        for (std::size_t n = 1; n <= order; n += 2) c[n] = Complex(1.0, 0.0);
        out.push_back(make_starlike_fixture(
            "two-slit", TruncatedSeries(std::move(c)),
            [](Complex z) { return (1.0 + z * z) / (1.0 - z * z); }));
    }
    return out;
}

}  // namespace concavekit

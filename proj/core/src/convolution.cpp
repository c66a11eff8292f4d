#include "concavekit/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace concavekit {

namespace {

Complex polar_unit(double t) { return {std::cos(t), std::sin(t)}; }

void require_normalized(const TruncatedSeries& f, const char* who) {
    if (f.order() < 2 || std::abs(f[0]) > 1e-12 || std::abs(f[1] - Complex(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument(std::string(who) + ": series not normalized (a_0=0, a_1=1)");
    }
}

/// sum_{n >= n_start} n^2 r^n, summed until terms fall below machine noise.
double quadratic_tail(std::size_t n_start, double r) {
    double acc = 0.0;
    double rn = std::pow(r, static_cast<double>(n_start));
    for (std::size_t n = n_start; n < n_start + 100000; ++n) {
        const double term = static_cast<double>(n) * static_cast<double>(n) * rn;
        acc += term;
        if (term < 1e-300 || term < acc * 1e-18) break;
        rn *= r;
    }
    return acc;
}

}  // namespace

UnimodularParam::UnimodularParam(Complex x) : value(x) {
    if (std::abs(std::abs(x) - 1.0) >= 1e-12) {
        throw std::domain_error("UnimodularParam: |x| must equal 1");
    }
}

UnimodularParam UnimodularParam::from_angle(double t) {
    return UnimodularParam(polar_unit(t));
}

RegionQuadratic region_for_alpha(double alpha) {
    return RegionQuadratic{Complex((alpha - 2.0) / (2.0 * (alpha + 1.0)), 0.0)};
}

std::string to_string(RegionLocation loc) {
    switch (loc) {
        case RegionLocation::Inside: return "inside";
        case RegionLocation::Boundary: return "boundary";
        case RegionLocation::Outside: return "outside";
    }
    return "unknown";
}

TruncatedSeries conv_coeffs_A(const ConcaveParams& params, const TruncatedSeries& f,
                              const UnimodularParam& x) {
    require_normalized(f, "conv_coeffs_A");
    const double alpha = params.alpha;
    const Complex xv = x.value;
    const std::size_t n_out = f.order() - 1;
    std::vector<Complex> a(n_out + 1);
    a[0] = Complex(alpha - 1.0, 0.0);
    for (std::size_t n = 1; n <= n_out; ++n) {
        const double nd = static_cast<double>(n);
        a[n] = (Complex(alpha - nd - 1.0, 0.0) - nd * xv) * (nd + 1.0) * f[n + 1] +
               (Complex(nd + 1.0, 0.0) + (nd + alpha) * xv) * nd * f[n];
    }
    return TruncatedSeries(std::move(a));
}

VerificationReport nonvanish_test(const TruncatedSeries& series, double r_test,
                                  std::optional<double> growth_bound) {
    if (r_test <= 0.0 || r_test > 0.5 + 1e-12) {
        throw std::domain_error("nonvanish_test: r_test must lie in (0, 0.5]");
    }
    const std::size_t n_coeff = series.order() + 1;

    double g_emp = std::abs(series[0]);
    for (std::size_t n = 1; n < n_coeff; ++n) {
        g_emp = std::max(g_emp, std::abs(series[n]) / (static_cast<double>(n) * static_cast<double>(n)));
    }
    double g = g_emp;
    if (growth_bound) {
        // declared bound must hold on at least the upper half of the range
        for (std::size_t n = std::max<std::size_t>(1, n_coeff / 2); n < n_coeff; ++n) {
            if (std::abs(series[n]) >
                *growth_bound * static_cast<double>(n) * static_cast<double>(n)) {
                throw std::invalid_argument(
                    "nonvanish_test: growth bound violated on the truncated range");
            }
        }
        g = *growth_bound;
    }
    const double tail = g * quadratic_tail(series.order() + 1, r_test);

    VerificationReport report;
    report.suite_id = "nonvanish";
    double min_abs = std::numeric_limits<double>::infinity();
    double max_abs = 0.0;
    Complex argmin{0.0, 0.0};
    const std::size_t nr = 64, na = 256;
    for (std::size_t i = 0; i < nr; ++i) {
        const double r = r_test * static_cast<double>(i + 1) / static_cast<double>(nr);
        for (std::size_t j = 0; j < na; ++j) {
            const Complex z = r * polar_unit(2.0 * std::numbers::pi *
                                             static_cast<double>(j) / static_cast<double>(na));
            const double v = std::abs(evaluate_polynomial(series, z));
            if (v < min_abs) {
                min_abs = v;
                argmin = z;
            }
            max_abs = std::max(max_abs, v);
        }
    }
    record_sample(report, "min-abs-minus-tail", min_abs - tail, argmin);
    report.n_samples = nr * na;
    if (min_abs > tail) {
        report.status = Status::Pass;
    } else if (tail <= 1e-9 * (1.0 + max_abs)) {
        // the tail is immaterial at the sampled scale: the truncated sum
        // itself reaches zero at desk scale
        report.status = Status::Fail;
    } else {
        report.status = Status::Inconclusive;  // the tail bound blocked the verdict; raise N
    }
    return report;
}

VerificationReport pi_lambda_test(const TruncatedSeries& s, double lambda,
                                  const PolarGrid& grid) {
    if (lambda <= 0.0) throw std::domain_error("pi_lambda_test: lambda must be positive");
    if (std::abs(s[0] - Complex(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("pi_lambda_test: s(0) must be 1");
    }
    const TruncatedSeries sprime = differentiate(s);

    VerificationReport report;
    report.suite_id = "pi-lambda";
    double max_re = -std::numeric_limits<double>::infinity();
    Complex argmax{0.0, 0.0};
    std::size_t n = 0;
    for (double r : grid.radii()) {
        for (double t : grid.angles()) {
            const Complex z = r * polar_unit(t);
            const Complex sv = evaluate(s, z, grid.r_max + 1e-12);
            ++n;
            if (std::abs(sv) < 1e-12) {
                record_sample(report, "s-vanished", -1.0, z);
                report.n_samples = n;
                report.status = Status::Fail;
                return report;
            }
            const double re = (z * evaluate(sprime, z, grid.r_max + 1e-12) / sv).real();
            if (re > max_re) {
                max_re = re;
                argmax = z;
            }
        }
    }
    record_sample(report, "half-lambda-minus-max", 0.5 * lambda + 1e-9 - max_re, argmax);
    report.n_samples = n;
    finalize_status(report);
    return report;
}

VerificationReport s_conv_test(const TruncatedSeries& s, const ConcaveParams& params,
                               const UnimodularParam& x, double r_test) {
    if (std::abs(x.value + Complex(1.0, 0.0)) <= 1e-8) {
        throw std::domain_error("s_conv_test: x = -1 is excluded");
    }
    if (std::abs(s[0] - Complex(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("s_conv_test: s(0) must be 1");
    }
    const double alpha = params.alpha;
    const Complex coeff = Complex(1.0 - alpha, 0.0) / (x.value + 1.0);
    const std::size_t m = s.order();

    // z s'(z) + (1-alpha)/(x+1) s(z)
    TruncatedSeries tested = differentiate(s).shifted_up().truncated(m) + coeff * s;

    // The same function through the two termwise kernels.
    std::vector<Complex> ramp(m + 1);
    for (std::size_t n = 0; n <= m; ++n) ramp[n] = Complex(static_cast<double>(n), 0.0);
    const TruncatedSeries via_kernels =
        hadamard(s, TruncatedSeries(std::move(ramp))) +
        coeff * hadamard(s, TruncatedSeries::geometric(Complex(1.0, 0.0), m));
    for (std::size_t n = 0; n <= m; ++n) {
        if (std::abs(tested[n] - via_kernels[n]) > 1e-12) {
            throw std::runtime_error("s_conv_test: kernel route disagrees with the linear form");
        }
    }

    VerificationReport report = nonvanish_test(tested, r_test);
    report.suite_id = "s-conv";
    return report;
}

TruncatedSeries b_coeffs(const ConcaveParams& params, const TruncatedSeries& f) {
    require_normalized(f, "b_coeffs");
    const double alpha = params.alpha;
    const std::size_t n_out = f.order() - 1;
    std::vector<Complex> b(n_out + 1);
    for (std::size_t n = 0; n <= n_out; ++n) {
        Complex acc(0.0, 0.0);
        for (std::size_t k = 0; k <= n; ++k) {
            const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
            acc += sign * binomial_coeff(alpha + 1.0, static_cast<long>(n - k)) *
                   static_cast<double>(k + 1) * f[k + 1];
        }
        b[n] = acc;
    }
    return TruncatedSeries(std::move(b));
}

VerificationReport coeff_inequality_check(const ConcaveParams& params,
                                          const TruncatedSeries& f, std::size_t n_max) {
    require_normalized(f, "coeff_inequality_check");
    const double alpha = params.alpha;
    const TruncatedSeries b = b_coeffs(params, f);
    if (n_max > b.order()) {
        throw std::invalid_argument("coeff_inequality_check: n_max exceeds available coefficients");
    }
    constexpr double tol = 1e-9;

    VerificationReport report;
    report.suite_id = "coeff-bounds";
    for (std::size_t n = 1; n <= n_max; ++n) {
        record_sample(report, "b" + std::to_string(n),
                      (alpha - 1.0) / static_cast<double>(n) + tol - std::abs(b[n]));
    }
    // the two low-order forms stated directly in the Taylor data of f
    record_sample(report, "a2-disk",
                  0.5 * (alpha - 1.0) + tol - std::abs(f[2] - 0.5 * (alpha + 1.0)));
    record_sample(report, "a3-form",
                  0.5 * (alpha - 1.0) + tol -
                      std::abs(3.0 * f[3] - 2.0 * (alpha + 1.0) * f[2] +
                               0.5 * alpha * (alpha + 1.0)));
    finalize_status(report);
    return report;
}

ConcaveFunction extremal_kaplan(const ConcaveParams& params, double theta, int k,
                                std::size_t order) {
    if (k < 1) throw std::domain_error("extremal_kaplan: k must be >= 1");
    if (order < static_cast<std::size_t>(k) + 2) {
        throw std::invalid_argument("extremal_kaplan: order too small for the given k");
    }
    const TruncatedSeries base =
        TruncatedSeries::one(order - 1) -
        TruncatedSeries::monomial(static_cast<std::size_t>(k), polar_unit(theta), order - 1);
    const TruncatedSeries s = pow_real(base, (params.alpha - 1.0) / static_cast<double>(k));
    return ConcaveFunction::from_kaplan(params, s);
}

Complex a_functional_raw(double alpha, Complex phi2, Complex phi3) {
    return -(phi3 - 0.25 * (alpha + 1.0) * phi2 * phi2 + (alpha + 1.0) * phi2) /
           (2.0 * (alpha + 1.0));
}

Complex a_functional(const ConcaveParams& params, const StarlikeFixture& phi) {
    const double alpha = params.alpha;
    const Complex a = a_functional_raw(alpha, phi.phi2, phi.phi3);

    // Independent route: a_3 of the transformed member determines the same value.
    StarlikeFixture probe = phi;
    probe.series = phi.series.truncated(8);
    const ConcaveFunction f = ConcaveFunction::lambda_transform(params, probe);
    const Complex via_a3 = 3.0 *
                           (f.coefficient(3) - (alpha + 1.0) * (alpha + 2.0) / 6.0) /
                           (alpha * alpha - 1.0);
    if (std::abs(via_a3 - a) > 1e-10) {
        throw std::runtime_error("a_functional: third-coefficient route disagrees");
    }
    return a;
}

RegionLocation region_membership(const RegionQuadratic& region, Complex p) {
    if (std::abs(region.c) >= 0.5) {
        throw std::domain_error("region_membership: |c| >= 1/2; boundary may self-intersect");
    }
    const std::size_t n_sample = 4096;
    std::vector<Complex> curve(n_sample);
    for (std::size_t j = 0; j < n_sample; ++j) {
        const Complex z = polar_unit(2.0 * std::numbers::pi * static_cast<double>(j) /
                                     static_cast<double>(n_sample));
        curve[j] = z + region.c * z * z;
    }

    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n_sample; ++j) {
        const Complex a = curve[j];
        const Complex b = curve[(j + 1) % n_sample];
        const Complex ab = b - a;
        const double len2 = std::norm(ab);
        double t = len2 > 0.0 ? ((p - a) * std::conj(ab)).real() / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        dist = std::min(dist, std::abs(p - (a + t * ab)));
    }
    if (dist < 1e-6) return RegionLocation::Boundary;

    double winding = 0.0;
    for (std::size_t j = 0; j < n_sample; ++j) {
        winding += std::arg((curve[(j + 1) % n_sample] - p) / (curve[j] - p));
    }
    const long turns = std::lround(winding / (2.0 * std::numbers::pi));
    return turns != 0 ? RegionLocation::Inside : RegionLocation::Outside;
}

}  // namespace concavekit

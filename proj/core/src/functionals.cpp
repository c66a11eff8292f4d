#include "concavekit/functionals.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace concavekit {

namespace {

Complex polar_unit(double t) { return {std::cos(t), std::sin(t)}; }

Complex eval_f(const ConcaveFunction& f, Complex z, double r_max) {
    if (std::abs(z) <= r_max) return evaluate(f.series(), z, r_max);
    if (f.has_closed_form_f()) return f.closed_form_f(z);
    throw std::domain_error("integral_means: |z| beyond guard radius and no closed form");
}

/// Golden-section maximization of a unimodal-ish slice; every candidate is a
/// genuine evaluation, so the running best stays a certified lower bound.
template <typename F>
void golden_refine(F&& value, double lo, double hi, int iters, double& best,
                   double& best_arg, std::size_t& n_evals) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = value(x1), f2 = value(x2);
    n_evals += 2;
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = value(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = value(x1);
        }
        ++n_evals;
    }
    const double xm = (f1 > f2) ? x1 : x2;
    const double fm = std::max(f1, f2);
    if (fm > best) {
        best = fm;
        best_arg = xm;
    }
}

}  // namespace

bool DiskRegion::contains(Complex w, double tol) const {
    return std::abs(w - center) <= radius + tol;
}

double DiskRegion::margin(Complex w, double tol) const {
    return radius + tol - std::abs(w - center);
}

Complex pre_schwarzian_at(const ConcaveFunction& f, Complex z, double r_max) {
    if (std::abs(z) > r_max) {
        if (f.has_closed_form_pre_schwarzian()) return f.closed_form_pre_schwarzian(z);
        throw std::domain_error("pre_schwarzian_at: |z| beyond guard radius and no closed form");
    }
    const Complex fp = evaluate(f.derivative_series(), z, r_max);
    if (std::abs(fp) <= 1e-12) {
        throw std::runtime_error("pre_schwarzian_at: f' vanished; input is not a concave member");
    }
    return evaluate(f.second_derivative_series(), z, r_max) / fp;
}

Complex scaled_functional(const ConcaveFunction& f, Complex z, double r_max) {
    return (1.0 - std::norm(z)) * pre_schwarzian_at(f, z, r_max);
}

DiskRegion variability_disk(const ConcaveParams& params, Complex z) {
    const Complex zb = std::conj(z);
    return DiskRegion{2.0 * zb + (params.alpha + 1.0) * (1.0 - zb) / (1.0 - z),
                      params.alpha - 1.0};
}

DiskRegion variability_disk_fixed_a(const ConcaveParams& params, Complex z, Complex a) {
    if (std::abs(a) > 1.0 + 1e-12) {
        throw std::domain_error("variability_disk_fixed_a: |a| > 1");
    }
    const double alpha = params.alpha;
    const Complex zb = std::conj(z);
    const Complex ab = std::conj(a);
    const double den = 1.0 + std::norm(z) + 2.0 * (a * z).real();
    const Complex base = 2.0 * zb + (alpha + 1.0) * (1.0 - zb) / (1.0 - z);
    const Complex shift = (alpha - 1.0) * (zb * (1.0 + std::norm(a) + ab * zb) + a) / den;
    const double radius = (alpha - 1.0) * (1.0 - std::norm(a)) * std::abs(z) / den;
    return DiskRegion{base + shift, radius};
}

NormEstimate norm_estimate(const ConcaveFunction& f, double r_cap,
                           const RefinementSpec& refinement, double r_max) {
    if (r_cap > 0.999 + 1e-12) {
        throw std::domain_error("norm_estimate: r_cap must not exceed 0.999");
    }
    if (r_cap > r_max && !f.has_closed_form_pre_schwarzian()) {
        throw std::domain_error(
            "norm_estimate: r_cap beyond guard radius needs a closed-form channel");
    }

    auto weighted = [&](double r, double t) {
        const Complex z = r * polar_unit(t);
        return (1.0 - r * r) * std::abs(pre_schwarzian_at(f, z, r_max));
    };

    std::size_t n_evals = 0;
    double best = -1.0;
    std::size_t best_i = 0, best_j = 0;
    const std::size_t nr = refinement.n_radii, na = refinement.n_angles;
    for (std::size_t j = 0; j < na; ++j) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(na);
        for (std::size_t i = 0; i < nr; ++i) {
            const double r = r_cap * static_cast<double>(i + 1) / static_cast<double>(nr);
            const double v = weighted(r, t);
            ++n_evals;
            // strict > keeps the argmax at the smallest angle index, then
            // the smallest radius index, whatever the evaluation order
            if (v > best) {
                best = v;
                best_i = i;
                best_j = j;
            }
        }
    }

    double r_best = r_cap * static_cast<double>(best_i + 1) / static_cast<double>(nr);
    double t_best = 2.0 * std::numbers::pi * static_cast<double>(best_j) / static_cast<double>(na);
    const double dr = r_cap / static_cast<double>(nr);
    const double dt = 2.0 * std::numbers::pi / static_cast<double>(na);

    for (int round = 0; round < refinement.rounds; ++round) {
        golden_refine([&](double t) { return weighted(r_best, t); }, t_best - dt,
                      t_best + dt, refinement.golden_iters, best, t_best, n_evals);
        const double r_lo = std::max(0.0, r_best - dr);
        const double r_hi = std::min(r_cap, r_best + dr);
        golden_refine([&](double r) { return weighted(r, t_best); }, r_lo, r_hi,
                      refinement.golden_iters, best, r_best, n_evals);
    }

    NormEstimate est;
    est.lower = best;
    est.r_used = r_cap;
    est.argmax = r_best * polar_unit(t_best);
    est.n_samples = n_evals;
    return est;
}

std::pair<double, double> distortion_bounds(const ConcaveParams& params, double r) {
    if (r < 0.0 || r >= 1.0) throw std::domain_error("distortion_bounds: r outside [0,1)");
    const double alpha = params.alpha;
    return {std::pow(1.0 - r, alpha - 1.0) / std::pow(1.0 + r, alpha + 1.0),
            std::pow(1.0 + r, alpha - 1.0) / std::pow(1.0 - r, alpha + 1.0)};
}

double integral_means(const ConcaveFunction& f, double p, double r, std::size_t n_quad,
                      double r_max) {
    if (p <= 0.0) throw std::domain_error("integral_means: p must be positive");
    if (n_quad < 4) throw std::domain_error("integral_means: too few quadrature nodes");
    double acc = 0.0;
    for (std::size_t j = 0; j < n_quad; ++j) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(n_quad);
        acc += std::pow(std::abs(eval_f(f, r * polar_unit(t), r_max)), p);
    }
    return acc / static_cast<double>(n_quad);
}

double hardy_exponent_estimate(const ConcaveFunction& f, double p,
                               const std::vector<double>& radii) {
    if (radii.size() < 3) {
        throw std::invalid_argument("hardy_exponent_estimate: need at least three radii");
    }
    // peak of |f|^p at the boundary point has width ~ 1-r
    std::vector<double> xs, ys;
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) {
            throw std::domain_error("hardy_exponent_estimate: radii must lie in (0,1)");
        }
        std::size_t n_quad = 4096;
        while (static_cast<double>(n_quad) < 20.0 / (1.0 - r)) n_quad *= 2;
        xs.push_back(-std::log(1.0 - r));
        ys.push_back(std::log(integral_means(f, p, r, n_quad)));
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace concavekit

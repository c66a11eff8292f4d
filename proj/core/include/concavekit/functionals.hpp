#pragma once

#include <vector>

#include "concavekit/concave_function.hpp"
#include "concavekit/verification.hpp"

namespace concavekit {

/// Closed disk {w : |w - center| <= radius}.
struct DiskRegion {
    Complex center{0.0, 0.0};
    double radius = 0.0;

    bool contains(Complex w, double tol = 1e-9) const;
    /// Slack left before w exits the disk (tolerance folded in).
    double margin(Complex w, double tol = 1e-9) const;
};

/// Certified lower bound for the weighted sup of |f''/f'|: the reported
/// value was attained at an evaluated point, so it never exceeds the true
/// supremum, and refining the search can only raise it.
struct NormEstimate {
    double lower = 0.0;
    double r_used = 0.0;
    Complex argmax{0.0, 0.0};
    std::size_t n_samples = 0;
};

/// Search controls for norm_estimate.
struct RefinementSpec {
    std::size_t n_radii = 64;
    std::size_t n_angles = 256;
    int rounds = 2;             // alternating angular/radial refinements
    int golden_iters = 40;
};

/// f''(z)/f'(z).  Inside the guard radius the stored series are used; beyond
/// it a closed-form channel is required.  A vanishing f'(z) means the input
/// was not a concave member.
Complex pre_schwarzian_at(const ConcaveFunction& f, Complex z,
                          double r_max = kDefaultEvalRadius);

/// (1 - |z|^2) f''(z)/f'(z).
Complex scaled_functional(const ConcaveFunction& f, Complex z,
                          double r_max = kDefaultEvalRadius);

/// Disk of variability of the scaled functional over the whole class:
/// center 2 conj(z) + (alpha+1)(1-conj(z))/(1-z), radius alpha-1.
DiskRegion variability_disk(const ConcaveParams& params, Complex z);

/// Same functional with f''(0) = alpha+1+(alpha-1)a pinned, |a| <= 1.
DiskRegion variability_disk_fixed_a(const ConcaveParams& params, Complex z, Complex a);

/// Coarse polar grid over |z| <= r_cap followed by golden-section refinement
/// of the best cell.  Reports the best evaluated value, never an
/// extrapolation.  Beyond the series guard a closed-form channel must exist.
NormEstimate norm_estimate(const ConcaveFunction& f, double r_cap,
                           const RefinementSpec& refinement = RefinementSpec{},
                           double r_max = kDefaultEvalRadius);

/// Sharp envelope for |f'| on |z| = r:
/// (1-r)^{alpha-1}/(1+r)^{alpha+1} <= |f'| <= (1+r)^{alpha-1}/(1-r)^{alpha+1}.
std::pair<double, double> distortion_bounds(const ConcaveParams& params, double r);

/// Hardy mean M_p(r)^p average: (1/2pi) integral |f(r e^{it})|^p dt by the
/// trapezoid rule (periodic integrand, spectrally accurate once the peak of
/// width ~1-r is resolved; use n_quad >= 20/(1-r)).
double integral_means(const ConcaveFunction& f, double p, double r, std::size_t n_quad,
                      double r_max = kDefaultEvalRadius);

/// Least-squares slope of log M_p(r) against -log(1-r): near 0 for bounded
/// means, near p*alpha - 1 for the extremal blow-up rate.  Needs at least
/// three radii and closed-form evaluation of f.
double hardy_exponent_estimate(const ConcaveFunction& f, double p,
                               const std::vector<double>& radii);

}  // namespace concavekit

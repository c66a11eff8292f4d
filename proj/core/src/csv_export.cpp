#include "concavekit/csv_export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "concavekit/functionals.hpp"

namespace concavekit {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string row(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += num(values[i]);
    }
    out += "\r\n";
    return out;
}

std::string render_distortion(const RunConfig& cfg, const std::vector<double>& radii,
                              double alpha) {
    const ConcaveParams params(alpha);
    std::vector<ConcaveFunction> family;
    for (std::size_t k = 0; k < 16; ++k) {
        family.push_back(ConcaveFunction::extremal_g_theta(
            params, 2.0 * kPi * static_cast<double>(k) / 16.0, cfg.order));
    }
    std::string out = "r,lower,upper,sample_min,sample_max\r\n";
    for (double r : radii) {
        const auto [lo, hi] = distortion_bounds(params, r);
        double smin = std::numeric_limits<double>::infinity();
        double smax = 0.0;
        for (const ConcaveFunction& f : family) {
            for (std::size_t j = 0; j < 64; ++j) {
                const double t = 2.0 * kPi * static_cast<double>(j) / 64.0;
                const double v =
                    std::abs(f.closed_form_fprime(r * Complex(std::cos(t), std::sin(t))));
                smin = std::min(smin, v);
                smax = std::max(smax, v);
            }
        }
        out += row({r, lo, hi, smin, smax});
    }
    return out;
}

std::string render_means(const RunConfig& cfg, const std::vector<double>& radii,
                         double alpha) {
    const ConcaveFunction g0 =
        ConcaveFunction::extremal_g_theta(ConcaveParams(alpha), 0.0, cfg.order);
    std::string out = "r,m_p04,m_p07\r\n";
    for (double r : radii) {
        std::size_t n_quad = cfg.n_quad;
        while (static_cast<double>(n_quad) < 20.0 / (1.0 - r)) n_quad *= 2;
        out += row({r, integral_means(g0, 0.4, r, n_quad, cfg.r_max),
                    integral_means(g0, 0.7, r, n_quad, cfg.r_max)});
    }
    return out;
}

std::string render_norm_radial(const RunConfig& cfg, const std::vector<double>& radii,
                               double alpha) {
    const ConcaveParams params(alpha);
    const ConcaveFunction g_pi = ConcaveFunction::extremal_g_theta(params, kPi, cfg.order);
    const ConcaveFunction g0 = ConcaveFunction::extremal_g_theta(params, 0.0, cfg.order);
    const ConcaveFunction central =
        ConcaveFunction::from_schwarz(params, SchwarzFunction::constant(0.0), cfg.order);
    std::string out = "r,g_pi,g_zero,central\r\n";
    for (double r : radii) {
        const double cap = std::min(r, cfg.r_cap);
        out += row({r, norm_estimate(g_pi, cap, RefinementSpec{}, cfg.r_max).lower,
                    norm_estimate(g0, cap, RefinementSpec{}, cfg.r_max).lower,
                    norm_estimate(central, cap, RefinementSpec{}, cfg.r_max).lower});
    }
    return out;
}

std::string render_disk_boundary(const RunConfig&, double alpha, Complex z,
                                 std::size_t n_points) {
    const DiskRegion disk = variability_disk(ConcaveParams(alpha), z);
    std::string out = "t,re,im\r\n";
    for (std::size_t j = 0; j < n_points; ++j) {
        const double t = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_points);
        const Complex w = disk.center + disk.radius * Complex(std::cos(t), std::sin(t));
        out += row({t, w.real(), w.imag()});
    }
    return out;
}

}  // namespace

const std::vector<std::string>& curve_ids() {
    static const std::vector<std::string> ids = {"distortion", "means", "norm-radial",
                                                 "disk-boundary"};
    return ids;
}

std::vector<double> default_curve_radii(const std::string& curve_id) {
    std::vector<double> r;
    if (curve_id == "distortion") {
        for (int i = 0; i <= 18; ++i) r.push_back(0.05 * i);
    } else if (curve_id == "means") {
        r = {0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999};
    } else if (curve_id == "norm-radial") {
        for (int i = 1; i <= 19; ++i) r.push_back(0.05 * i);
        r.push_back(0.99);
        r.push_back(0.999);
    }
    return r;  // disk-boundary takes no radius grid
}

std::string render_curve(const RunConfig& config, const std::string& curve_id,
                         const std::vector<double>& radii, double alpha, Complex z) {
    config.validate();
    if (curve_id == "distortion") return render_distortion(config, radii, alpha);
    if (curve_id == "means") return render_means(config, radii, alpha);
    if (curve_id == "norm-radial") return render_norm_radial(config, radii, alpha);
    if (curve_id == "disk-boundary") return render_disk_boundary(config, alpha, z, 256);
    throw ConfigError("unknown curve id: " + curve_id);
}

void export_curve(const RunConfig& config, const std::string& curve_id,
                  const std::string& path, const std::vector<double>& radii,
                  double alpha, Complex z) {
    const std::string body = render_curve(config, curve_id, radii, alpha, z);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("export_curve: cannot open " + path);
    out << body;
    if (!out.good()) throw std::runtime_error("export_curve: write failed for " + path);
}

}  // namespace concavekit

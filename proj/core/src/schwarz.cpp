#include "concavekit/schwarz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace concavekit {

namespace {

Complex polar_unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

}  // namespace

SchwarzFunction SchwarzFunction::constant(Complex value) {
    if (std::abs(value) > 1.0 + 1e-12) {
        throw std::domain_error("SchwarzFunction::constant: |value| > 1");
    }
    SchwarzFunction w;
    w.kind_ = Kind::Constant;
    w.constant_ = value;
    return w;
}

SchwarzFunction SchwarzFunction::monomial(double theta, int k) {
    if (k < 1) throw std::domain_error("SchwarzFunction::monomial: k must be >= 1");
    SchwarzFunction w;
    w.kind_ = Kind::Monomial;
    w.theta_ = theta;
    w.power_ = k;
    return w;
}

SchwarzFunction SchwarzFunction::blaschke(std::vector<Complex> zeros, double rho,
                                          double theta0) {
    if (rho <= 0.0 || rho > 1.0) {
        throw std::domain_error("SchwarzFunction::blaschke: rho outside (0,1]");
    }
    for (const Complex& a : zeros) {
        if (std::abs(a) >= 1.0) {
            throw std::domain_error("SchwarzFunction::blaschke: factor parameter outside the disk");
        }
    }
    SchwarzFunction w;
    w.kind_ = Kind::Blaschke;
    w.zeros_ = std::move(zeros);
    w.rho_ = rho;
    w.theta0_ = theta0;
    return w;
}

SchwarzFunction SchwarzFunction::from_series(TruncatedSeries s) {
    // The polynomial is the map; its sup over the disk is approached on the
    // circle r = 0.999 (maximum principle), sampled densely.
    const std::size_t n_sample = 512;
    for (std::size_t j = 0; j < n_sample; ++j) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(n_sample);
        const Complex z = 0.999 * polar_unit(t);
        if (std::abs(evaluate_polynomial(s, z)) > 1.0 + 1e-9) {
            throw std::domain_error("SchwarzFunction::from_series: |omega| exceeds 1 on the disk");
        }
    }
    SchwarzFunction w;
    w.kind_ = Kind::Series;
    w.poly_ = std::make_shared<const TruncatedSeries>(std::move(s));
    return w;
}

SchwarzFunction SchwarzFunction::pinned_at_origin(Complex a, SchwarzFunction inner) {
    if (std::abs(a) > 1.0 + 1e-12) {
        throw std::domain_error("SchwarzFunction::pinned_at_origin: |a| > 1");
    }
    SchwarzFunction w;
    w.kind_ = Kind::MoebiusPinned;
    w.pin_ = a;
    w.inner_ = std::make_shared<const SchwarzFunction>(std::move(inner));
    return w;
}

SchwarzFunction SchwarzFunction::random(Rng& rng) {
    const std::size_t m = 1 + rng.below(3);
    std::vector<Complex> zeros;
    zeros.reserve(m);
    for (std::size_t j = 0; j < m; ++j) zeros.push_back(rng.in_disk(0.8));
    const double theta0 = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double rho = (rng.uniform() < 0.5) ? 1.0 : rng.uniform(0.3, 1.0);
    return blaschke(std::move(zeros), rho, theta0);
}

SchwarzFunction SchwarzFunction::random_pinned(Complex a, Rng& rng) {
    return pinned_at_origin(a, random(rng));
}

Complex SchwarzFunction::at_origin() const {
    switch (kind_) {
        case Kind::Constant: return constant_;
        case Kind::Monomial: return power_ == 1 ? polar_unit(theta_) : Complex(0.0, 0.0);
        case Kind::Blaschke: return value_at(Complex(0.0, 0.0));
        case Kind::Series: return (*poly_)[0];
        case Kind::MoebiusPinned: return pin_;
    }
    return {0.0, 0.0};
}

Complex SchwarzFunction::value_at(Complex z) const {
    switch (kind_) {
        case Kind::Constant:
            return constant_;
        case Kind::Monomial:
            return polar_unit(theta_) * std::pow(z, power_ - 1);
        case Kind::Blaschke: {
            Complex v = rho_ * polar_unit(theta0_);
            for (const Complex& a : zeros_) {
                v *= (z + a) / (1.0 + std::conj(a) * z);
            }
            return v;
        }
        case Kind::Series:
            return evaluate_polynomial(*poly_, z);
        case Kind::MoebiusPinned: {
            const Complex w = z * inner_->value_at(z);
            return (pin_ + w) / (1.0 + std::conj(pin_) * w);
        }
    }
    return {0.0, 0.0};
}

TruncatedSeries SchwarzFunction::series(std::size_t order) const {
    switch (kind_) {
        case Kind::Constant:
            return TruncatedSeries::constant(constant_, order);
        case Kind::Monomial: {
            const std::size_t k = static_cast<std::size_t>(power_ - 1);
            if (k > order) return TruncatedSeries(order);
            return TruncatedSeries::monomial(k, polar_unit(theta_), order);
        }
        case Kind::Blaschke: {
            TruncatedSeries v = TruncatedSeries::constant(rho_ * polar_unit(theta0_), order);
            for (const Complex& a : zeros_) {
                // (z + a)/(1 + conj(a) z)
                TruncatedSeries num = TruncatedSeries::from_list({a, Complex(1.0, 0.0)}, order);
                v = mul(v, mul(num, TruncatedSeries::geometric(-std::conj(a), order)));
            }
            return v;
        }
        case Kind::Series:
            return poly_->truncated(order);
        case Kind::MoebiusPinned: {
            const TruncatedSeries w = inner_->series(order).shifted_up().truncated(order);
            const TruncatedSeries num = w + pin_;
            const TruncatedSeries den = std::conj(pin_) * w + Complex(1.0, 0.0);
            return div(num, den);
        }
    }
    return TruncatedSeries(order);
}

}  // namespace concavekit

#pragma once

#include <memory>
#include <vector>

#include "concavekit/rng.hpp"
#include "concavekit/truncated_series.hpp"

namespace concavekit {

/// Analytic self-map of the unit disk bounded by 1.  Every kind evaluates
/// pointwise exactly anywhere in the open disk, which is what lets norm
/// searches go past the series guard radius.
class SchwarzFunction {
public:
    enum class Kind { Constant, Monomial, Blaschke, Series, MoebiusPinned };

    /// omega == value, |value| <= 1.
    static SchwarzFunction constant(Complex value);

    /// omega(z) = e^{i theta} z^{k-1}, k >= 1.
    static SchwarzFunction monomial(double theta, int k);

    /// omega(z) = rho e^{i theta0} prod (z + a_j)/(1 + conj(a_j) z), each
    /// |a_j| < 1, 0 < rho <= 1.  Exactly bounded by 1 on the disk.
    static SchwarzFunction blaschke(std::vector<Complex> zeros, double rho,
                                    double theta0);

    /// The polynomial itself is the map.  Validated by sampling |omega| on
    /// the circle r = 0.999.
    static SchwarzFunction from_series(TruncatedSeries w);

    /// omega(z) = (a + z*inner(z)) / (1 + conj(a) z*inner(z)); pins
    /// omega(0) = a while staying a self-map of the disk.
    static SchwarzFunction pinned_at_origin(Complex a, SchwarzFunction inner);

    /// Product of m <= 3 Blaschke factors with |a_j| <= 0.8, random
    /// rotation, damped by rho in [0.3,1] half the time (rho = 1 otherwise).
    static SchwarzFunction random(Rng& rng);

    /// Random map with omega(0) = a.
    static SchwarzFunction random_pinned(Complex a, Rng& rng);

    Kind kind() const { return kind_; }
    Complex at_origin() const;
    Complex value_at(Complex z) const;
    TruncatedSeries series(std::size_t order) const;

private:
    SchwarzFunction() = default;

    Kind kind_ = Kind::Constant;
    Complex constant_{0.0, 0.0};
    double theta_ = 0.0;         // Monomial
    int power_ = 1;              // Monomial: k
    std::vector<Complex> zeros_; // Blaschke
    double rho_ = 1.0;           // Blaschke
    double theta0_ = 0.0;        // Blaschke
    std::shared_ptr<const TruncatedSeries> poly_;        // Series
    Complex pin_{0.0, 0.0};                              // MoebiusPinned
    std::shared_ptr<const SchwarzFunction> inner_;       // MoebiusPinned
};

}  // namespace concavekit

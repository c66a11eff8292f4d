#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace concavekit {

using Complex = std::complex<double>;

/// Default guard radius for evaluating a truncated germ inside the unit disk.
/// Beyond it the dropped tail of the series is no longer negligible and
/// evaluate() refuses to produce a silently inaccurate number.
inline constexpr double kDefaultEvalRadius = 0.85;

/// Degree-N Taylor polynomial with complex coefficients, standing for an
/// analytic germ at the origin.  All arithmetic is exact modulo z^{N+1}:
/// no operation reads or writes coefficients beyond index N.
///
/// Binary operations require equal orders; callers truncate first.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order);

    /// Takes ownership of c_0..c_N.  Throws std::invalid_argument on an
    /// empty list or any non-finite coefficient.
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries constant(Complex c0, std::size_t order);
    static TruncatedSeries one(std::size_t order) { return constant(1.0, order); }
    /// ck * z^k.
    static TruncatedSeries monomial(std::size_t k, Complex ck, std::size_t order);
    /// 1/(1 - ratio*z) = sum ratio^n z^n.
    static TruncatedSeries geometric(Complex ratio, std::size_t order);
    /// Pads the given leading coefficients with zeros up to `order`.
    static TruncatedSeries from_list(std::vector<Complex> leading, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex operator[](std::size_t n) const { return coeffs_.at(n); }
    void set(std::size_t n, Complex value);

    /// Slice (or zero-pad) to the requested order.
    TruncatedSeries truncated(std::size_t new_order) const;
    /// Multiply by z: order grows by one.
    TruncatedSeries shifted_up() const;
    /// Divide by z, dropping c_0 (callers assert c_0 ~ 0 first); order drops by one.
    TruncatedSeries shifted_down() const;

    double max_abs_coeff() const;

private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(Complex s, const TruncatedSeries& a);
TruncatedSeries operator*(double s, const TruncatedSeries& a);
TruncatedSeries operator+(const TruncatedSeries& a, Complex c0);
TruncatedSeries operator-(const TruncatedSeries& a, Complex c0);

/// Cauchy product modulo z^{N+1}.  Orders must match.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return mul(a, b);
}

/// Cauchy product with compensated accumulation (FMA product errors folded
/// through Kahan sums).  Same contract as mul; use where large coefficients
/// cancel to small results, e.g. extracting a signature from a derivative.
TruncatedSeries mul_compensated(const TruncatedSeries& a, const TruncatedSeries& b);

/// Power-series division; requires |b_0| > 1e-14.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

/// Series exponential via the recurrence from (exp a)' = a' * exp a.
TruncatedSeries exp(const TruncatedSeries& a);

/// Series logarithm, principal branch anchored at log(a_0); requires a_0 != 0.
TruncatedSeries log(const TruncatedSeries& a);

/// a^beta = exp(beta * log a), principal branch; requires a_0 != 0.
TruncatedSeries pow_real(const TruncatedSeries& a, double beta);

/// Generalized binomial coefficient (beta choose m) = prod_{j=1..m} (beta-j+1)/j.
double binomial_coeff(double beta, long m);

/// Termwise (Hadamard) product of coefficients.  Orders must match.
TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b);

/// c_n -> (n+1) c_{n+1}; order drops by one (a constant differentiates to 0).
TruncatedSeries differentiate(const TruncatedSeries& a);

/// Antiderivative vanishing at 0, truncated back to the input order:
/// [c_0..c_N] -> [0, c_0/1, ..., c_{N-1}/N].
TruncatedSeries integrate_from_zero(const TruncatedSeries& a);

/// Horner evaluation.  Throws when |z| exceeds the guard radius; raise the
/// order or shrink |z| instead of accepting a silent tail error.
Complex evaluate(const TruncatedSeries& a, Complex z, double r_max = kDefaultEvalRadius);

/// Horner evaluation of the polynomial itself, no radius guard.  Use only
/// where the truncated series *is* the function (Schwarz series kind,
/// polynomial Kaplan signatures), not a truncated germ.
Complex evaluate_polynomial(const TruncatedSeries& a, Complex z);

}  // namespace concavekit

#include "concavekit/truncated_series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace concavekit {

namespace {

bool finite(Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b,
                        const char* op) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    }
}

constexpr double kPivotTol = 1e-14;

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order)
    : coeffs_(order + 1, Complex(0.0, 0.0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("TruncatedSeries: empty coefficient list");
    }
    for (const Complex& c : coeffs_) {
        if (!finite(c)) {
            throw std::invalid_argument("TruncatedSeries: non-finite coefficient");
        }
    }
}

TruncatedSeries TruncatedSeries::constant(Complex c0, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c0;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, Complex ck, std::size_t order) {
    if (k > order) {
        throw std::invalid_argument("TruncatedSeries::monomial: exponent beyond order");
    }
    TruncatedSeries s(order);
    s.coeffs_[k] = ck;
    return s;
}

TruncatedSeries TruncatedSeries::geometric(Complex ratio, std::size_t order) {
    TruncatedSeries s(order);
    Complex p(1.0, 0.0);
    for (std::size_t n = 0; n <= order; ++n) {
        s.coeffs_[n] = p;
        p *= ratio;
    }
    return s;
}

TruncatedSeries TruncatedSeries::from_list(std::vector<Complex> leading, std::size_t order) {
    leading.resize(order + 1, Complex(0.0, 0.0));
    return TruncatedSeries(std::move(leading));
}

void TruncatedSeries::set(std::size_t n, Complex value) {
    if (!finite(value)) {
        throw std::invalid_argument("TruncatedSeries::set: non-finite coefficient");
    }
    coeffs_.at(n) = value;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
    std::vector<Complex> c(coeffs_.begin(),
                           coeffs_.begin() +
                               static_cast<std::ptrdiff_t>(
                                   std::min(new_order, order()) + 1));
    c.resize(new_order + 1, Complex(0.0, 0.0));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::shifted_up() const {
    std::vector<Complex> c(coeffs_.size() + 1, Complex(0.0, 0.0));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) c[n + 1] = coeffs_[n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::shifted_down() const {
    if (order() == 0) {
        throw std::invalid_argument("TruncatedSeries::shifted_down: order is already 0");
    }
    std::vector<Complex> c(coeffs_.begin() + 1, coeffs_.end());
    return TruncatedSeries(std::move(c));
}

double TruncatedSeries::max_abs_coeff() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "add");
    std::vector<Complex> c(a.coeffs());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] += b[n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "sub");
    std::vector<Complex> c(a.coeffs());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] -= b[n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    std::vector<Complex> c(a.coeffs());
    for (Complex& x : c) x = -x;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& a) {
    std::vector<Complex> c(a.coeffs());
    for (Complex& x : c) x *= s;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(double s, const TruncatedSeries& a) {
    return Complex(s, 0.0) * a;
}

TruncatedSeries operator+(const TruncatedSeries& a, Complex c0) {
    std::vector<Complex> c(a.coeffs());
    c[0] += c0;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, Complex c0) {
    return a + (-c0);
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "mul");
    const std::size_t n_coeff = a.order() + 1;
    std::vector<Complex> c(n_coeff, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n_coeff; ++i) {
        const Complex ai = a[i];
        if (ai == Complex(0.0, 0.0)) continue;
        for (std::size_t j = 0; i + j < n_coeff; ++j) {
            c[i + j] += ai * b[j];
        }
    }
    return TruncatedSeries(std::move(c));
}

namespace {

// Neumaier accumulation: exact to first order even when a term exceeds the
// running sum, which classic Kahan mishandles.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + carry; }
};

}  // namespace

TruncatedSeries mul_compensated(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "mul_compensated");
    const std::size_t n_coeff = a.order() + 1;
    std::vector<Complex> c(n_coeff);
    for (std::size_t n = 0; n < n_coeff; ++n) {
        KahanSum re, im;
        for (std::size_t k = 0; k <= n; ++k) {
            const double ar = a[k].real(), ai = a[k].imag();
            const double br = b[n - k].real(), bi = b[n - k].imag();
            const double p1 = ar * br;
            const double p2 = ai * bi;
            const double p3 = ar * bi;
            const double p4 = ai * br;
            re.add(p1);
            re.add(-p2);
            re.add(std::fma(ar, br, -p1));
            re.add(-std::fma(ai, bi, -p2));
            im.add(p3);
            im.add(p4);
            im.add(std::fma(ar, bi, -p3));
            im.add(std::fma(ai, br, -p4));
        }
        c[n] = Complex(re.value(), im.value());
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "div");
    if (std::abs(b[0]) <= kPivotTol) {
        throw std::domain_error("div: divisor constant term below 1e-14, series not invertible");
    }
    const std::size_t n_coeff = a.order() + 1;
    std::vector<Complex> q(n_coeff);
    for (std::size_t n = 0; n < n_coeff; ++n) {
        Complex acc = a[n];
        for (std::size_t k = 0; k < n; ++k) acc -= q[k] * b[n - k];
        q[n] = acc / b[0];
    }
    return TruncatedSeries(std::move(q));
}

TruncatedSeries exp(const TruncatedSeries& a) {
    const std::size_t n_coeff = a.order() + 1;
    std::vector<Complex> e(n_coeff);
    e[0] = std::exp(a[0]);
    // n e_n = sum_{j=1..n} j a_j e_{n-j}
    for (std::size_t n = 1; n < n_coeff; ++n) {
        Complex acc(0.0, 0.0);
        for (std::size_t j = 1; j <= n; ++j) {
            acc += static_cast<double>(j) * a[j] * e[n - j];
        }
        e[n] = acc / static_cast<double>(n);
    }
    return TruncatedSeries(std::move(e));
}

TruncatedSeries log(const TruncatedSeries& a) {
    if (std::abs(a[0]) <= kPivotTol) {
        throw std::domain_error("log: series constant term vanishes");
    }
    const std::size_t n_coeff = a.order() + 1;
    std::vector<Complex> l(n_coeff);
    l[0] = std::log(a[0]);
    // n a_n = sum_{j=1..n} j l_j a_{n-j}
    for (std::size_t n = 1; n < n_coeff; ++n) {
        Complex acc = static_cast<double>(n) * a[n];
        for (std::size_t j = 1; j < n; ++j) {
            acc -= static_cast<double>(j) * l[j] * a[n - j];
        }
        l[n] = acc / (static_cast<double>(n) * a[0]);
    }
    return TruncatedSeries(std::move(l));
}

TruncatedSeries pow_real(const TruncatedSeries& a, double beta) {
    if (std::abs(a[0]) <= kPivotTol) {
        throw std::domain_error("pow_real: series constant term vanishes");
    }
    // integer exponents by binary powering: polynomial powers come out with
    // exact zero tails instead of exp/log dust that later multiplies into
    // large neighbouring coefficients
    if (beta == std::nearbyint(beta) && std::abs(beta) <= 64.0) {
        long e = std::lround(beta);
        if (e == 0) return TruncatedSeries::one(a.order());
        const bool negative = e < 0;
        e = std::labs(e);
        TruncatedSeries base = a;
        TruncatedSeries acc = TruncatedSeries::one(a.order());
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            e >>= 1;
            if (e > 0) base = mul(base, base);
        }
        return negative ? div(TruncatedSeries::one(a.order()), acc) : acc;
    }
    return exp(Complex(beta, 0.0) * log(a));
}

double binomial_coeff(double beta, long m) {
    if (m < 0) {
        throw std::domain_error("binomial_coeff: negative lower index");
    }
    double v = 1.0;
    for (long j = 1; j <= m; ++j) {
        v *= (beta - static_cast<double>(j) + 1.0) / static_cast<double>(j);
    }
    return v;
}

TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "hadamard");
    std::vector<Complex> c(a.coeffs());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] *= b[n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries differentiate(const TruncatedSeries& a) {
    if (a.order() == 0) return TruncatedSeries(0);
    std::vector<Complex> c(a.order());
    for (std::size_t n = 0; n + 1 <= a.order(); ++n) {
        c[n] = static_cast<double>(n + 1) * a[n + 1];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries integrate_from_zero(const TruncatedSeries& a) {
    std::vector<Complex> c(a.order() + 1, Complex(0.0, 0.0));
    for (std::size_t n = 1; n <= a.order(); ++n) {
        c[n] = a[n - 1] / static_cast<double>(n);
    }
    return TruncatedSeries(std::move(c));
}

Complex evaluate(const TruncatedSeries& a, Complex z, double r_max) {
    if (std::abs(z) > r_max) {
        throw std::domain_error("evaluate: |z| exceeds the guard radius " +
                                std::to_string(r_max));
    }
    return evaluate_polynomial(a, z);
}

Complex evaluate_polynomial(const TruncatedSeries& a, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t n = a.order() + 1; n-- > 0;) {
        acc = acc * z + a[n];
    }
    return acc;
}

}  // namespace concavekit

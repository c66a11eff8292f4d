#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace concavekit {

/// Deterministic random stream.  Doubles are produced from raw 64-bit draws
/// (not std::uniform_real_distribution) so a given seed yields the same
/// sequence on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Independent stream for (seed, label): concurrent suites draw from
    /// their own streams and never perturb each other's results.
    static Rng for_stream(std::uint64_t seed, std::string_view label);

    std::uint64_t next() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Point on the unit circle.
    std::complex<double> unit();

    /// Point with modulus uniform in [0, max_mod], angle uniform.
    std::complex<double> in_disk(double max_mod);

private:
    std::mt19937_64 gen_;
};

}  // namespace concavekit

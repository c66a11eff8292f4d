#include "concavekit/rng.hpp"

#include <cmath>
#include <numbers>

namespace concavekit {

namespace {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

Rng Rng::for_stream(std::uint64_t seed, std::string_view label) {
    return Rng(splitmix64(seed ^ fnv1a64(label)));
}

std::complex<double> Rng::unit() {
    const double t = uniform(0.0, 2.0 * std::numbers::pi);
    return {std::cos(t), std::sin(t)};
}

std::complex<double> Rng::in_disk(double max_mod) {
    return uniform(0.0, max_mod) * unit();
}

}  // namespace concavekit

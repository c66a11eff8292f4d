#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "concavekit/verification.hpp"

namespace concavekit {

/// Configuration shared by the verification suites and the exporters.
/// validate() enforces the guards declared by the underlying modules.
struct RunConfig {
    std::vector<double> alphas{1.25, 1.5, 2.0};
    std::size_t order = 128;
    double r_max = 0.85;
    double r_cap = 0.999;
    double r_test = 0.5;
    std::size_t grid_radii = 16;
    std::size_t grid_angles = 256;
    std::size_t norm_radii = 64;
    std::size_t norm_angles = 256;
    std::size_t n_quad = 4096;
    std::uint64_t seed = 42;

    void validate() const;  // throws ConfigError
};

/// Configuration problems get their own type so the command line can map
/// them to a distinct exit code.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Registered suite identifiers in run order.
const std::vector<std::string>& suite_ids();

/// Runs one suite.  Deterministic: the suite draws randomness only from a
/// stream derived from (config.seed, suite_id).  Unknown ids and invalid
/// configurations throw ConfigError.
VerificationReport run_suite(const RunConfig& config, const std::string& suite_id);

std::vector<VerificationReport> run_all(const RunConfig& config);

}  // namespace concavekit

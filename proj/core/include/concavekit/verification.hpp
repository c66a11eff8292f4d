#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "concavekit/truncated_series.hpp"

namespace concavekit {

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status s);

/// One observation inside a verification run: what was measured, how much
/// slack was left (tolerance already folded in, so pass <=> margin >= 0),
/// and where in the disk it happened.
struct SampleRecord {
    std::string label;
    double margin = 0.0;
    Complex location{0.0, 0.0};
};

/// Structured pass/fail record for a check or a whole suite.
/// Invariant: status == Pass implies margin >= 0.  `margin` is the worst
/// (smallest) sample margin.  `seed` is recorded whenever randomness was
/// used; the same seed and configuration reproduce the report exactly.
struct VerificationReport {
    std::string suite_id;
    Status status = Status::Fail;
    double margin = 0.0;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
    std::vector<SampleRecord> details;
    std::int64_t wall_time_ms = 0;
};

/// Folds a sample into a report, keeping the running worst margin.
void record_sample(VerificationReport& report, std::string label, double margin,
                   Complex location = {0.0, 0.0});

/// Sets status from the accumulated worst margin (>= 0 passes).
void finalize_status(VerificationReport& report);

/// Polar sampling grid: n_radii values in [r_min, r_max] (both inclusive)
/// times n_angles equispaced angles starting at 0.
struct PolarGrid {
    double r_min = 0.1;
    double r_max = 0.85;
    std::size_t n_radii = 16;
    std::size_t n_angles = 256;

    std::vector<double> radii() const;
    std::vector<double> angles() const;
};

/// Serializes reports as a JSON array.  Wall times are deliberately not
/// included so identical seed + config yields byte-identical output.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace concavekit

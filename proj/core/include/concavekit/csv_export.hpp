#pragma once

#include <string>
#include <vector>

#include "concavekit/suites.hpp"
#include "concavekit/truncated_series.hpp"

namespace concavekit {

/// Known curve identifiers: distortion, means, norm-radial, disk-boundary.
const std::vector<std::string>& curve_ids();

/// Writes one curve as CSV (RFC 4180: CRLF rows, '.' decimal point, 17
/// significant digits).  `radii` may be empty, producing a header-only file.
/// Column layouts:
///   distortion:    r, lower, upper, sample_min, sample_max
///                  (samples: |f'| over the extremal family and 64 angles)
///   means:         r, m_p04, m_p07  (Hardy means of the widest extremal)
///   norm-radial:   r, g_pi, g_zero, central  (weighted sup up to radius r)
///   disk-boundary: t, re, im  (boundary of the variability disk at z)
std::string render_curve(const RunConfig& config, const std::string& curve_id,
                         const std::vector<double>& radii, double alpha, Complex z);

/// Default radius grids per curve.
std::vector<double> default_curve_radii(const std::string& curve_id);

void export_curve(const RunConfig& config, const std::string& curve_id,
                  const std::string& path, const std::vector<double>& radii,
                  double alpha, Complex z);

}  // namespace concavekit

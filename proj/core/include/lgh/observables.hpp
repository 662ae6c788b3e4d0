#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lgh {

// Internal energy and specific heat per site with block errors:
// U = <A>, C = <A^2> - <A>^2. Per-bin values are computed independently;
// the reported value is the mean over bins and the error is the standard
// deviation (n-1 normalization) over bins.
struct MeasurementRecord {
  double u_per_site = 0;
  double c_per_site = 0;
  double u_err = 0;
  double c_err = 0;
  int bins = 0;
  std::int64_t sample_count = 0;
};

// Series length is truncated to a multiple of bins; bins >= 2 and a
// nonempty series are required. Per-bin C uses the two-pass second central
// moment, which is exactly nonnegative.
MeasurementRecord estimate_uc(std::span<const double> samples, int bins,
                              double volume);

struct Histogram {
  double lo = 0;
  double bin_width = 0;
  std::vector<std::int64_t> counts;
  std::int64_t total() const;
};

// Counts over [min(samples), max(samples)] with the given bin width; the
// maximum lands in the last bin. Throws on empty input or width <= 0.
Histogram action_histogram(std::span<const double> samples, double bin_width);

}  // namespace lgh

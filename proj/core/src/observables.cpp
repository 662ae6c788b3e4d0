#include "lgh/observables.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace lgh {

MeasurementRecord estimate_uc(std::span<const double> samples, int bins,
                              double volume) {
  if (samples.empty()) throw std::invalid_argument("empty sample series");
  if (bins < 2) throw std::invalid_argument("bins must be >= 2");
  const std::size_t per_bin = samples.size() / static_cast<std::size_t>(bins);
  if (per_bin == 0)
    throw std::invalid_argument("fewer samples than bins");

  std::vector<double> u_bin(bins), c_bin(bins);
  for (int b = 0; b < bins; ++b) {
    const double* blk = samples.data() + per_bin * static_cast<std::size_t>(b);
    double mean = 0;
    for (std::size_t i = 0; i < per_bin; ++i) mean += blk[i];
    mean /= static_cast<double>(per_bin);
    // second central moment (mean of squares minus square of mean, computed
    // two-pass so it is exactly nonnegative)
    double var = 0;
    for (std::size_t i = 0; i < per_bin; ++i) {
      const double d = blk[i] - mean;
      var += d * d;
    }
    var /= static_cast<double>(per_bin);
    u_bin[b] = mean / volume;
    c_bin[b] = var / volume;
  }

  auto mean_sd = [bins](const std::vector<double>& x) {
    double m = 0;
    for (double v : x) m += v;
    m /= bins;
    double s = 0;
    for (double v : x) s += (v - m) * (v - m);
    s = std::sqrt(s / (bins - 1));
    return std::pair<double, double>{m, s};
  };

  MeasurementRecord rec;
  std::tie(rec.u_per_site, rec.u_err) = mean_sd(u_bin);
  std::tie(rec.c_per_site, rec.c_err) = mean_sd(c_bin);
  rec.bins = bins;
  rec.sample_count = static_cast<std::int64_t>(per_bin) * bins;
  return rec;
}

std::int64_t Histogram::total() const {
  std::int64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

Histogram action_histogram(std::span<const double> samples, double bin_width) {
  if (samples.empty()) throw std::invalid_argument("empty sample series");
  if (!(bin_width > 0))
    throw std::invalid_argument("histogram bin width must be positive");
  double lo = samples[0], hi = samples[0];
  for (double s : samples) {
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  Histogram h;
  h.lo = lo;
  h.bin_width = bin_width;
  const auto nbins =
      static_cast<std::size_t>(std::floor((hi - lo) / bin_width)) + 1;
  h.counts.assign(nbins, 0);
  for (double s : samples) {
    auto k = static_cast<std::size_t>((s - lo) / bin_width);
    if (k >= nbins) k = nbins - 1;
    ++h.counts[k];
  }
  return h;
}

}  // namespace lgh

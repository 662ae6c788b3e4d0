#include "lgh/scan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lgh {

ScanAxis scan_axis_from_string(std::string_view name) {
  if (name == "c1") return ScanAxis::c1;
  if (name == "c2") return ScanAxis::c2;
  if (name == "c3") return ScanAxis::c3;
  if (name == "c1_equals_c3") return ScanAxis::c1_equals_c3;
  throw std::invalid_argument("unknown scan axis '" + std::string(name) +
                              "' (expected c1, c2, c3 or c1_equals_c3)");
}

std::string to_string(ScanAxis axis) {
  switch (axis) {
    case ScanAxis::c1: return "c1";
    case ScanAxis::c2: return "c2";
    case ScanAxis::c3: return "c3";
    case ScanAxis::c1_equals_c3: return "c1_equals_c3";
  }
  return "?";
}

std::string to_string(TransitionOrder order) {
  switch (order) {
    case TransitionOrder::first: return "first";
    case TransitionOrder::second: return "second";
    case TransitionOrder::none: return "none";
  }
  return "?";
}

std::string to_string(SizeTrend trend) {
  switch (trend) {
    case SizeTrend::flat: return "flat";
    case SizeTrend::growing: return "growing";
    case SizeTrend::shrinking: return "shrinking";
    case SizeTrend::mixed: return "mixed";
  }
  return "?";
}

void apply_axis(ScanAxis axis, double value, double& c1, double& c2,
                double& c3) {
  switch (axis) {
    case ScanAxis::c1: c1 = value; break;
    case ScanAxis::c2: c2 = value; break;
    case ScanAxis::c3: c3 = value; break;
    case ScanAxis::c1_equals_c3: c1 = c3 = value; break;
  }
}

std::vector<double> scan_grid(const ScanSchedule& s) {
  if (!(s.dc > 0)) throw std::invalid_argument("scan increment dc must be > 0");
  if (s.hi < s.lo) throw std::invalid_argument("scan range must have lo <= hi");
  const double steps = (s.hi - s.lo) / s.dc;
  const auto n = static_cast<int>(std::lround(steps));
  if (std::abs(steps - n) > 1e-6)
    throw std::invalid_argument("(hi - lo) / dc must be an integer");
  std::vector<double> grid(n + 1);
  for (int k = 0; k <= n; ++k) grid[k] = s.lo + k * s.dc;
  return grid;
}

ScanBranches run_hysteresis_scan(std::shared_ptr<const LatticeGeometry> geom,
                                 ModelPreset preset, const ScanSchedule& s) {
  const std::vector<double> grid = scan_grid(s);
  const int n = static_cast<int>(grid.size());

  ScanBranches out;
  out.up.resize(n);
  out.down.resize(n);

  auto point_params = [&](int branch, int k) {
    RunParameters p = s.run;
    p.seed = derive_seed(s.run.seed, static_cast<std::uint64_t>(branch) + 1,
                         static_cast<std::uint64_t>(k));
    return p;
  };
  auto couplings_at = [&](double c) {
    double c1 = s.base_c1, c2 = s.base_c2, c3 = s.base_c3;
    apply_axis(s.axis, c, c1, c2, c3);
    return preset_couplings(preset, c1, c2, c3);
  };
  auto record = [&](ScanPoint& pt, double c, const RunPointResult& r) {
    pt.c = c;
    pt.record = estimate_uc(r.action_series, s.run.bins,
                            static_cast<double>(geom->volume()));
    pt.acceptance = r.meas_stats.acceptance_ratio();
  };

  FieldConfiguration carry;  // final configuration of the previous point
  bool have_carry = false;
  auto run_one = [&](int branch, int k, double c) {
    const RunParameters p = point_params(branch, k);
    RunPointResult r =
        (s.warm_start && have_carry)
            ? run_point(couplings_at(c), p, std::move(carry))
            : run_point(geom, couplings_at(c), p, s.sector);
    ScanPoint& pt = branch == 0 ? out.up[k] : out.down[k];
    record(pt, c, r);
    carry = std::move(r.final_config);
    have_carry = true;
  };

  for (int k = 0; k < n; ++k) run_one(0, k, grid[k]);          // ramp up
  for (int k = n - 1; k >= 0; --k) run_one(1, k, grid[k]);     // ramp down
  return out;
}

namespace {

struct Pooled {
  std::vector<double> c, u, ue, cc, ce;
  int n = 0;
};

double combine_err(double a, double b) { return std::sqrt(a * a + b * b); }

// weighted mean of the two branch values with a conservative combined error
void pool_pair(double x1, double e1, double x2, double e2, double& x,
               double& e) {
  if (e1 > 0 && e2 > 0) {
    const double w1 = 1.0 / (e1 * e1), w2 = 1.0 / (e2 * e2);
    x = (w1 * x1 + w2 * x2) / (w1 + w2);
  } else {
    x = 0.5 * (x1 + x2);
  }
  e = 0.5 * combine_err(e1, e2);
}

Pooled pool_branches(const ScanBranches& br) {
  Pooled p;
  p.n = static_cast<int>(br.up.size());
  p.c.resize(p.n);
  p.u.resize(p.n);
  p.ue.resize(p.n);
  p.cc.resize(p.n);
  p.ce.resize(p.n);
  for (int k = 0; k < p.n; ++k) {
    p.c[k] = br.up[k].c;
    pool_pair(br.up[k].record.u_per_site, br.up[k].record.u_err,
              br.down[k].record.u_per_site, br.down[k].record.u_err, p.u[k],
              p.ue[k]);
    pool_pair(br.up[k].record.c_per_site, br.up[k].record.c_err,
              br.down[k].record.c_per_site, br.down[k].record.c_err, p.cc[k],
              p.ce[k]);
  }
  return p;
}

double median_abs(std::vector<double> v) {
  if (v.empty()) return 0;
  for (double& x : v) x = std::abs(x);
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

TransitionReport classify_transition(const ScanBranches& br,
                                     const ClassifyOptions& opt) {
  const int n = static_cast<int>(br.up.size());
  if (n == 0 || br.down.size() != br.up.size())
    throw std::invalid_argument("branches must share a nonempty grid");
  for (int k = 0; k < n; ++k)
    if (std::abs(br.up[k].c - br.down[k].c) > 1e-12)
      throw std::invalid_argument("branch grids do not match");

  TransitionReport rep;

  // branch separation in sigma units, point by point
  std::vector<double> gap_sigma(n, 0.0), gap_abs(n, 0.0);
  for (int k = 0; k < n; ++k) {
    const auto& a = br.up[k].record;
    const auto& b = br.down[k].record;
    gap_abs[k] = std::abs(a.u_per_site - b.u_per_site);
    const double sig = combine_err(a.u_err, b.u_err);
    gap_sigma[k] = sig > 0 ? gap_abs[k] / sig : (gap_abs[k] > 0 ? 1e30 : 0.0);
    rep.evidence.max_branch_gap_sigma =
        std::max(rep.evidence.max_branch_gap_sigma, gap_sigma[k]);
  }
  for (int k = 0; k + 1 < n; ++k)
    rep.evidence.hysteresis_loop_area +=
        0.5 * (gap_abs[k] + gap_abs[k + 1]) *
        std::abs(br.up[k + 1].c - br.up[k].c);

  const Pooled p = pool_branches(br);
  for (int k = 0; k < n; ++k)
    rep.evidence.c_peak_height = std::max(rep.evidence.c_peak_height, p.cc[k]);

  // adjacent-point steps of pooled U and C
  std::vector<double> du(std::max(0, n - 1)), dcc(std::max(0, n - 1));
  double u_jump_best = 0, c_jump_best = 0;
  int u_jump_at = -1, c_jump_at = -1;
  for (int k = 0; k + 1 < n; ++k) {
    du[k] = p.u[k + 1] - p.u[k];
    dcc[k] = p.cc[k + 1] - p.cc[k];
  }
  const double u_med = median_abs(du);
  const double c_med = median_abs(dcc);
  for (int k = 0; k + 1 < n; ++k) {
    const double se_u = combine_err(p.ue[k], p.ue[k + 1]);
    const double se_c = combine_err(p.ce[k], p.ce[k + 1]);
    const double zu =
        se_u > 0 ? std::abs(du[k]) / se_u : (du[k] != 0 ? 1e30 : 0.0);
    const double zc =
        se_c > 0 ? std::abs(dcc[k]) / se_c : (dcc[k] != 0 ? 1e30 : 0.0);
    rep.evidence.u_jump_sigma = std::max(rep.evidence.u_jump_sigma, zu);
    rep.evidence.c_jump_sigma = std::max(rep.evidence.c_jump_sigma, zc);
    const bool u_qualifies =
        zu > opt.jump_sigma &&
        (u_med > 0 ? std::abs(du[k]) > opt.jump_over_median * u_med
                   : std::abs(du[k]) > 0);
    const bool c_qualifies =
        zc > opt.c_level_sigma &&
        (c_med > 0 ? std::abs(dcc[k]) > opt.c_jump_over_median * c_med
                   : std::abs(dcc[k]) > 0);
    if (u_qualifies && zu > u_jump_best) {
      u_jump_best = zu;
      u_jump_at = k;
    }
    if (c_qualifies && zc > c_jump_best) {
      c_jump_best = zc;
      c_jump_at = k;
    }
  }

  // rule 1: hysteresis — a run of significantly separated points
  int best_start = -1, best_len = 0, cur_start = -1, cur_len = 0;
  for (int k = 0; k < n; ++k) {
    if (gap_sigma[k] > opt.gap_sigma) {
      if (cur_len == 0) cur_start = k;
      ++cur_len;
      if (cur_len > best_len) {
        best_len = cur_len;
        best_start = cur_start;
      }
    } else {
      cur_len = 0;
    }
  }
  if (best_len >= opt.min_gap_run) {
    rep.order = TransitionOrder::first;
    rep.c_lo = p.c[best_start];
    rep.c_hi = p.c[best_start + best_len - 1];
    return rep;
  }

  // rule 2: a gap without hysteresis — a lone strongly separated point or a
  // single-point U jump; hedged as second order with low confidence
  if (best_len == 1 && rep.evidence.max_branch_gap_sigma > opt.single_gap_sigma) {
    int k = best_start;
    rep.order = TransitionOrder::second;
    rep.low_confidence = true;
    rep.c_lo = p.c[std::max(0, k - 1)];
    rep.c_hi = p.c[std::min(n - 1, k + 1)];
    return rep;
  }
  if (u_jump_at >= 0) {
    rep.order = TransitionOrder::second;
    rep.low_confidence = true;
    rep.c_lo = p.c[u_jump_at];
    rep.c_hi = p.c[u_jump_at + 1];
    return rep;
  }

  // rule 3: continuous U but C steps between levels
  if (c_jump_at >= 0) {
    rep.order = TransitionOrder::second;
    rep.c_lo = p.c[c_jump_at];
    rep.c_hi = p.c[c_jump_at + 1];
    return rep;
  }

  rep.order = TransitionOrder::none;
  rep.c_lo = p.c.front();
  rep.c_hi = p.c.back();
  return rep;
}

PeakEstimate c_peak_in_window(const ScanBranches& br, double window_lo,
                              double window_hi) {
  const Pooled p = pool_branches(br);
  PeakEstimate best;
  bool found = false;
  for (int k = 0; k < p.n; ++k) {
    if (p.c[k] < window_lo - 1e-12 || p.c[k] > window_hi + 1e-12) continue;
    if (!found || p.cc[k] > best.height) {
      best = {p.c[k], p.cc[k], p.ce[k]};
      found = true;
    }
  }
  if (!found)
    throw std::invalid_argument("no scan points inside the peak window");
  return best;
}

SizeTrend size_trend(std::span<const SizePeak> peaks) {
  if (peaks.size() < 2)
    throw std::invalid_argument("size trend needs at least two sizes");
  bool any_up = false, any_down = false;
  for (std::size_t i = 0; i + 1 < peaks.size(); ++i) {
    const auto& a = peaks[i].peak;
    const auto& b = peaks[i + 1].peak;
    const double sig = std::sqrt(a.err * a.err + b.err * b.err);
    const double diff = b.height - a.height;
    if (sig > 0 ? diff > 2.0 * sig : diff > 0) any_up = true;
    if (sig > 0 ? diff < -2.0 * sig : diff < 0) any_down = true;
  }
  if (any_up && any_down) return SizeTrend::mixed;
  if (any_up) return SizeTrend::growing;
  if (any_down) return SizeTrend::shrinking;
  return SizeTrend::flat;
}

SizeDependenceReport size_dependence_probe(std::span<const int> extents,
                                           ModelPreset preset,
                                           const ScanSchedule& window_scan) {
  if (extents.size() < 2)
    throw std::invalid_argument("size dependence probe needs >= 2 sizes");
  SizeDependenceReport rep;
  for (int ext : extents) {
    auto geom = std::make_shared<LatticeGeometry>(LatticeGeometry::cubic(ext));
    const ScanBranches br = run_hysteresis_scan(geom, preset, window_scan);
    SizePeak sp;
    sp.extent = ext;
    sp.peak = c_peak_in_window(br, window_scan.lo, window_scan.hi);
    rep.peaks.push_back(sp);
  }
  rep.trend = size_trend(rep.peaks);
  return rep;
}

}  // namespace lgh

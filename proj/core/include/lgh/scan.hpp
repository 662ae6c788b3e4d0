#pragma once

#include <span>
#include <string>
#include <vector>

#include "lgh/engine.hpp"
#include "lgh/observables.hpp"

namespace lgh {

// Which scalar the ramp drives. c1_equals_c3 moves both together (the
// vertical axis used for the ItPtLs / ItPLs families).
enum class ScanAxis { c1, c2, c3, c1_equals_c3 };

ScanAxis scan_axis_from_string(std::string_view name);
std::string to_string(ScanAxis axis);

// A go-and-back ramp: the axis value rises from lo to hi in steps of dc,
// then falls back. With warm_start each point continues from the previous
// point's final configuration (this is what exposes hysteresis); without it
// every point starts fresh per `run.start`.
struct ScanSchedule {
  ScanAxis axis = ScanAxis::c1;
  double base_c1 = 0, base_c2 = 0, base_c3 = 0;  // fixed scalars
  double lo = 0;
  double hi = 0;
  double dc = 1;
  RunParameters run;  // per-point parameters; seeds are derived per point
  Sector sector = Sector::unitary;
  bool warm_start = true;
};

// Grid values lo, lo+dc, ..., hi; (hi-lo)/dc must be integral to 1e-6.
std::vector<double> scan_grid(const ScanSchedule& s);

// Apply the axis value on top of the base scalars.
void apply_axis(ScanAxis axis, double value, double& c1, double& c2,
                double& c3);

struct ScanPoint {
  double c = 0;
  MeasurementRecord record;
  double acceptance = 0;  // measured during the measurement phase
};

// Both branches are stored ascending in c, index-aligned; `down` was
// executed in descending order.
struct ScanBranches {
  std::vector<ScanPoint> up;
  std::vector<ScanPoint> down;
};

ScanBranches run_hysteresis_scan(std::shared_ptr<const LatticeGeometry> geom,
                                 ModelPreset preset, const ScanSchedule& s);

// Classification thresholds. All tests are in sigma units or dimensionless
// ratios, so rescaling data and errors together changes nothing. The 3-sigma
// branch-gap default with 2-point persistence is the first-order criterion;
// the remaining knobs are calibration constants (see classify_transition).
struct ClassifyOptions {
  double gap_sigma = 3.0;         // branch separation, per point
  int min_gap_run = 2;            // consecutive significant points => first
  double single_gap_sigma = 4.0;  // lone separated point => second, hedged
  double jump_sigma = 5.0;        // adjacent-point U step significance
  double jump_over_median = 4.0;  // ... and vs the median step size
  double c_level_sigma = 3.5;     // adjacent-point C step significance
  double c_jump_over_median = 4.0;
};

enum class TransitionOrder { first, second, none };
std::string to_string(TransitionOrder order);

struct TransitionEvidence {
  double max_branch_gap_sigma = 0;  // U branch separation, sigma units
  double hysteresis_loop_area = 0;  // integral |U_up - U_down| dc
  double c_peak_height = 0;         // max pooled C/V
  double u_jump_sigma = 0;          // largest adjacent-point U step
  double c_jump_sigma = 0;          // largest adjacent-point C step
};

struct TransitionReport {
  TransitionOrder order = TransitionOrder::none;
  bool low_confidence = false;  // single-point gap without hysteresis
  double c_lo = 0, c_hi = 0;    // location interval
  TransitionEvidence evidence;
};

// Rules, applied in order:
//   first   — U branches separated by > gap_sigma over >= min_gap_run
//             consecutive points (a hysteresis loop).
//   second (low confidence) — a lone >single_gap_sigma branch point, or a
//             single-point U jump passing both jump thresholds: a gap
//             without hysteresis.
//   second  — U continuous but C steps between levels (both c thresholds).
//   none    — everything below threshold.
// Symmetric under exchanging the branch labels. Throws if the grids differ.
TransitionReport classify_transition(const ScanBranches& branches,
                                     const ClassifyOptions& opt = {});

struct PeakEstimate {
  double c = 0;
  double height = 0;  // C/V at the peak (pooled branches)
  double err = 0;
};

// Largest pooled C/V over grid points with c in [window_lo, window_hi].
PeakEstimate c_peak_in_window(const ScanBranches& branches, double window_lo,
                              double window_hi);

enum class SizeTrend { flat, growing, shrinking, mixed };
std::string to_string(SizeTrend trend);

struct SizePeak {
  int extent = 0;
  PeakEstimate peak;
};

// Trend over sizes at 2-sigma resolution: growing/shrinking if every
// consecutive difference is significant in the same direction, flat if none
// is significant, mixed otherwise.
SizeTrend size_trend(std::span<const SizePeak> peaks);

struct SizeDependenceReport {
  std::vector<SizePeak> peaks;
  SizeTrend trend = SizeTrend::flat;
};

// Runs the window scan at each extent and reports the C-peak per size.
// Requires at least two sizes.
SizeDependenceReport size_dependence_probe(std::span<const int> extents,
                                           ModelPreset preset,
                                           const ScanSchedule& window_scan);

}  // namespace lgh

#pragma once

#include <cstdint>
#include <vector>

#include "lgh/action.hpp"
#include "lgh/rng.hpp"

namespace lgh {

enum class StartKind { hot, cold };

StartKind start_kind_from_string(std::string_view name);
std::string to_string(StartKind start);

// Parameters of a single Monte Carlo run at fixed couplings.
struct RunParameters {
  int therm_sweeps = 3000;
  int meas_sweeps = 5000;  // total measurement sweeps, divided into bins
  int bins = 10;
  StartKind start = StartKind::cold;
  std::uint64_t seed = 12345;
  double target_acc_lo = 0.6;
  double target_acc_hi = 0.8;
  double link_width = 1.0;  // initial proposal width per variable class
  double site_width = 1.0;
};

struct ClassStats {
  std::int64_t accepted = 0;
  std::int64_t proposed = 0;
  double ratio() const { return proposed ? double(accepted) / double(proposed) : 0.0; }
  ClassStats& operator+=(const ClassStats& o);
};

struct SweepStats {
  ClassStats link;
  ClassStats site;
  std::int64_t accepted() const { return link.accepted + site.accepted; }
  std::int64_t proposed() const { return link.proposed + site.proposed; }
  double acceptance_ratio() const {
    auto p = proposed();
    return p ? double(accepted()) / double(p) : 0.0;
  }
  SweepStats& operator+=(const SweepStats& o);
};

// Which variable classes a sweep updates. Links-only is the unitary-sector
// default; sites-only gives the frozen-gauge (XY) reduction.
struct UpdateMask {
  bool links = true;
  bool sites = true;
};

// cold: all angles zero. hot: i.i.d. uniform on [0, 2*pi) drawn from the
// seeded stream, links first (index order) then sites (higgs sector only).
FieldConfiguration init_config(std::shared_ptr<const LatticeGeometry> geom,
                               StartKind start, Sector sector,
                               std::uint64_t seed);

// One Metropolis pass: every link once in direction-major order (mu outer,
// site inner), then every site once (higgs sector). Proposal is
// angle + uniform(-w, w); acceptance probability min(1, exp(deltaA)) for the
// weight exp(+A). Convenience form that binds a kernel per call; run_point
// is the fast path for long runs.
SweepStats metropolis_sweep(FieldConfiguration& cfg, const Couplings& cpl,
                            double link_width, double site_width, Rng& rng,
                            UpdateMask mask = {});

// One width-control step: widths grow by 10% when acceptance is above the
// target band, shrink by 10% below it, clamped to [1e-3, pi]. Applied every
// 100 sweeps during thermalization only.
double tune_proposal_width(double acceptance, double width, double target_lo,
                           double target_hi);

inline constexpr int kTuneInterval = 100;
inline constexpr double kTuneFactor = 1.1;
inline constexpr double kWidthFloor = 1e-3;
inline constexpr double kWidthCap = kPi;

struct RunPointResult {
  std::vector<double> action_series;  // total action after each measurement sweep
  FieldConfiguration final_config;
  SweepStats therm_stats;
  SweepStats meas_stats;
  double link_width = 0;  // widths frozen for the measurement phase
  double site_width = 0;
  ActionComponents mean_components;  // averaged over bin-boundary snapshots
};

// Thermalize (with width tuning), then run meas_sweeps sweeps recording the
// total action after each one. The returned series has length meas_sweeps
// (bins * (meas_sweeps / bins) after truncation in estimate_uc). The final
// configuration is returned for warm-starting the next scan point.
RunPointResult run_point(const Couplings& cpl, const RunParameters& params,
                         FieldConfiguration start_cfg, UpdateMask mask = {});

// Same, starting from init_config(geom, params.start, sector, params.seed).
RunPointResult run_point(std::shared_ptr<const LatticeGeometry> geom,
                         const Couplings& cpl, const RunParameters& params,
                         Sector sector, UpdateMask mask = {});

}  // namespace lgh

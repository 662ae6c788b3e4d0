#include "lgh/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lgh/sweep_kernel.hpp"

namespace lgh {

StartKind start_kind_from_string(std::string_view name) {
  if (name == "hot") return StartKind::hot;
  if (name == "cold") return StartKind::cold;
  throw std::invalid_argument("unknown start '" + std::string(name) +
                              "' (expected hot or cold)");
}

std::string to_string(StartKind start) {
  return start == StartKind::hot ? "hot" : "cold";
}

ClassStats& ClassStats::operator+=(const ClassStats& o) {
  accepted += o.accepted;
  proposed += o.proposed;
  return *this;
}

SweepStats& SweepStats::operator+=(const SweepStats& o) {
  link += o.link;
  site += o.site;
  return *this;
}

FieldConfiguration init_config(std::shared_ptr<const LatticeGeometry> geom,
                               StartKind start, Sector sector,
                               std::uint64_t seed) {
  FieldConfiguration cfg = FieldConfiguration::cold(std::move(geom), sector);
  if (start == StartKind::hot) {
    Rng rng(seed);
    for (double& t : cfg.theta) t = rng.uniform(0.0, kTwoPi);
    if (sector == Sector::higgs)
      for (double& p : cfg.phi) p = rng.uniform(0.0, kTwoPi);
  }
  return cfg;
}

double tune_proposal_width(double acceptance, double width, double target_lo,
                           double target_hi) {
  if (acceptance > target_hi)
    width *= kTuneFactor;  // moves too timid, be bolder
  else if (acceptance < target_lo)
    width /= kTuneFactor;
  return std::clamp(width, kWidthFloor, kWidthCap);
}

namespace {

// One Metropolis pass over a bound kernel. Links in direction-major order,
// then sites. Proposal widths <= pi keep new angles within one period of
// [0, 2pi), which commit_* re-wraps canonically.
SweepStats sweep_once(FieldConfiguration& cfg, SweepKernel& kernel,
                      double link_width, double site_width, Rng& rng,
                      UpdateMask mask, double* action_accumulator) {
  SweepStats stats;
  const int v = cfg.g().volume();
  if (mask.links) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int s = 0; s < v; ++s) {
        const double nt =
            cfg.theta[s * 4 + mu] + rng.uniform(-link_width, link_width);
        const double da = kernel.link_delta(s, mu, nt);
        ++stats.link.proposed;
        if (da >= 0.0 || rng.uniform01() < std::exp(da)) {
          kernel.commit_link(cfg, s, mu, nt);
          ++stats.link.accepted;
          if (action_accumulator) *action_accumulator += da;
        }
      }
    }
  }
  if (mask.sites && cfg.sector == Sector::higgs) {
    for (int s = 0; s < v; ++s) {
      const double np = cfg.phi[s] + rng.uniform(-site_width, site_width);
      const double da = kernel.site_delta(s, np);
      ++stats.site.proposed;
      if (da >= 0.0 || rng.uniform01() < std::exp(da)) {
        kernel.commit_site(cfg, s, np);
        ++stats.site.accepted;
        if (action_accumulator) *action_accumulator += da;
      }
    }
  }
  return stats;
}

}  // namespace

SweepStats metropolis_sweep(FieldConfiguration& cfg, const Couplings& cpl,
                            double link_width, double site_width, Rng& rng,
                            UpdateMask mask) {
  SweepKernel kernel(cfg.g(), cpl);
  kernel.bind(cfg);
  return sweep_once(cfg, kernel, link_width, site_width, rng, mask, nullptr);
}

RunPointResult run_point(const Couplings& cpl, const RunParameters& params,
                         FieldConfiguration start_cfg, UpdateMask mask) {
  if (params.therm_sweeps < 0 || params.meas_sweeps <= 0)
    throw std::invalid_argument("sweep counts must be positive");
  if (params.bins < 2) throw std::invalid_argument("bins must be >= 2");

  RunPointResult out;
  out.final_config = std::move(start_cfg);
  FieldConfiguration& cfg = out.final_config;

  SweepKernel kernel(cfg.g(), cpl);
  kernel.bind(cfg);
  // the sweep stream is decoupled from the hot-start stream, which uses
  // params.seed directly
  Rng rng(derive_seed(params.seed, 0x5157, 0));

  double link_width = std::clamp(params.link_width, kWidthFloor, kWidthCap);
  double site_width = std::clamp(params.site_width, kWidthFloor, kWidthCap);

  // thermalization with width control every kTuneInterval sweeps
  SweepStats block;
  for (int i = 0; i < params.therm_sweeps; ++i) {
    const SweepStats s =
        sweep_once(cfg, kernel, link_width, site_width, rng, mask, nullptr);
    out.therm_stats += s;
    block += s;
    if ((i + 1) % kTuneInterval == 0) {
      if (block.link.proposed)
        link_width = tune_proposal_width(block.link.ratio(), link_width,
                                         params.target_acc_lo,
                                         params.target_acc_hi);
      if (block.site.proposed)
        site_width = tune_proposal_width(block.site.ratio(), site_width,
                                         params.target_acc_lo,
                                         params.target_acc_hi);
      block = SweepStats{};
    }
  }
  out.link_width = link_width;
  out.site_width = site_width;

  // measurement with frozen widths; the running action is re-synced from a
  // full recomputation at every bin boundary to stop accumulation drift
  out.action_series.reserve(params.meas_sweeps);
  const int per_bin = std::max(1, params.meas_sweeps / params.bins);
  double action = 0.0;
  int comp_snapshots = 0;
  for (int i = 0; i < params.meas_sweeps; ++i) {
    if (i % per_bin == 0) {
      const ActionComponents c = total_action_components(cfg, cpl);
      action = c.total();
      out.mean_components.link_term += c.link_term;
      out.mean_components.plaquette_term += c.plaquette_term;
      out.mean_components.l_term += c.l_term;
      ++comp_snapshots;
    }
    out.meas_stats += sweep_once(cfg, kernel, link_width, site_width, rng,
                                 mask, &action);
    out.action_series.push_back(action);
  }
  if (comp_snapshots > 0) {
    out.mean_components.link_term /= comp_snapshots;
    out.mean_components.plaquette_term /= comp_snapshots;
    out.mean_components.l_term /= comp_snapshots;
  }
  return out;
}

RunPointResult run_point(std::shared_ptr<const LatticeGeometry> geom,
                         const Couplings& cpl, const RunParameters& params,
                         Sector sector, UpdateMask mask) {
  return run_point(cpl, params,
                   init_config(std::move(geom), params.start, sector,
                               params.seed),
                   mask);
}

}  // namespace lgh

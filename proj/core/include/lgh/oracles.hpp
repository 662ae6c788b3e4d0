#pragma once

#include <span>
#include <string>
#include <vector>

#include "lgh/engine.hpp"
#include "lgh/observables.hpp"

namespace lgh {

// Independent re-implementation of the action by naive term enumeration:
// coordinate loops and explicit modular arithmetic, sharing no code with
// total_action. Small lattices only. This is the central anti-bug check.
double brute_force_action(const FieldConfiguration& cfg, const Couplings& cpl);

// <cos theta> of the one-variable weight exp(c cos theta), computed by
// adaptive quadrature (abs tol 1e-10); equals I1(c)/I0(c). Throws on
// non-convergence.
double single_link_expectation(double c);

// U/V to second order in the couplings: every cosine term of per-site
// multiplicity n and coefficient c contributes n*c^2/2. Valid for small
// couplings (advisory, not enforced).
double high_temp_u(const Couplings& cpl, const LatticeGeometry& geom);

// Simulation with all links frozen at theta = 0 and only phi updated: the
// c1 term becomes a nearest-neighbor XY coupling and the c3 term a
// next-nearest-neighbor one. The c2 plaquette contribution is a constant in
// this limit and is dropped from the reported action, so U measures the XY
// sector alone.
MeasurementRecord frozen_gauge_run(std::shared_ptr<const LatticeGeometry> geom,
                                   ModelPreset preset, double c1, double c2,
                                   double c3, const RunParameters& params);

// Deviation between the normalized weight exp(c cos theta) and its
// periodic-Gaussian form sum_{|m|<=m_max} exp(-(c/2)(theta - 2 pi m)^2),
// both normalized over one period: max over the grid of |p_cos - p_villain|
// relative to the density peak. The approximation improves with c.
// Requires m_max >= 3.
double villain_compare(double c, std::span<const double> theta_grid,
                       int m_max);

struct OracleCheck {
  std::string name;
  bool pass = false;
  double value = 0;      // measured discrepancy or statistic
  double threshold = 0;  // pass when value <= threshold
  std::string detail;
};

// The fast self-check battery behind the `oracle` CLI subcommand.
std::vector<OracleCheck> run_oracle_suite(std::uint64_t seed);

}  // namespace lgh

#pragma once

#include <vector>

#include "lgh/action.hpp"

namespace lgh {

// Optimized local-update engine used inside the Metropolis sweep. It keeps
// cos/sin of every angle cached so that staple sums need no trig calls;
// only the proposed angle costs one sincos. The caches are bitwise equal to
// cos/sin of the stored angles at all times.
//
// This is an optimization twin of link_action_delta / site_action_delta;
// the equivalence tests pin both against global recomputation.
class SweepKernel {
 public:
  SweepKernel(const LatticeGeometry& g, const Couplings& cpl);

  // Rebuild the caches from a configuration. Must be called before deltas
  // whenever cfg changed through anything but commit_*().
  void bind(const FieldConfiguration& cfg);

  // Action change if link (site, mu) were set to new_theta.
  double link_delta(int site, int mu, double new_theta) const;

  // Action change if phi at site were set to new_phi (higgs sector).
  double site_delta(int site, double new_phi) const;

  // Store an accepted value (canonically wrapped) into cfg and the caches.
  void commit_link(FieldConfiguration& cfg, int site, int mu,
                   double new_theta);
  void commit_site(FieldConfiguration& cfg, int site, double new_phi);

 private:
  const LatticeGeometry* g_;
  Couplings cpl_;
  bool higgs_ = false;
  std::vector<double> ct_, st_;  // cos/sin per link
  std::vector<double> cp_, sp_;  // cos/sin per site phase
};

}  // namespace lgh

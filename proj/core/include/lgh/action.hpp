#pragma once

#include "lgh/couplings.hpp"
#include "lgh/field_config.hpp"

namespace lgh {

struct ActionComponents {
  double link_term = 0;       // sum of c1 cosines
  double plaquette_term = 0;  // sum of c2 cosines
  double l_term = 0;          // sum of c3 cosines
  double total() const { return link_term + plaquette_term + l_term; }
};

// Oriented plaquette angle at `site` in `plane`:
//   theta_{x,mu,nu} = (theta_{x+mu,nu} - theta_{x,nu}) - (theta_{x+nu,mu} - theta_{x,mu})
// Returned unreduced; only its cosine is ever consumed.
double plaquette_angle(const FieldConfiguration& cfg, int site,
                       PlanePair plane);

// The full action. The L-term block for plane (mu, nu) at base site x is
//   cos(phi_{x+nu} + theta_{x,mu} - theta_{x,nu} - phi_{x+mu})
// + cos(phi_x     + theta_{x,mu} + theta_{x+mu,nu} - phi_{x+mu+nu})
// + cos(phi_{x+mu} + theta_{x+mu,nu} - theta_{x+nu,mu} - phi_{x+nu})
// + cos(phi_x     + theta_{x,nu} + theta_{x+nu,mu} - phi_{x+nu+mu})
// In the unitary sector all phi are zero and the expressions reduce to the
// pure link-angle form.
ActionComponents total_action_components(const FieldConfiguration& cfg,
                                         const Couplings& cpl);
double total_action(const FieldConfiguration& cfg, const Couplings& cpl);

// Action change if link (site, mu) were set to new_theta, computed from the
// terms containing that link only: one c1 term, two plaquettes per plane
// containing mu (6 total) and four L-terms per such plane (12 total).
// Cosines are evaluated directly; correctness is anchored by the
// global-recomputation oracle in the tests.
double link_action_delta(const FieldConfiguration& cfg, int site, int mu,
                         double new_theta, const Couplings& cpl);

// Action change if phi at `site` were set to new_phi: 8 c1 terms and 48
// L-term slots. Throws std::logic_error in the unitary sector.
double site_action_delta(const FieldConfiguration& cfg, int site,
                         double new_phi, const Couplings& cpl);

}  // namespace lgh

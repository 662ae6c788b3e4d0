#pragma once

#include <memory>
#include <vector>

#include "lgh/lattice.hpp"

namespace lgh {

// In the unitary sector phi is frozen at zero and only theta is dynamical.
// In the higgs sector both theta and phi are updated.
enum class Sector { unitary, higgs };

// Full Monte Carlo state: one compact angle per link and one per site, all
// kept in [0, 2*pi). Single-writer; read-only sharing across threads is safe.
struct FieldConfiguration {
  std::shared_ptr<const LatticeGeometry> geom;
  Sector sector = Sector::unitary;
  std::vector<double> theta;  // [site*4 + mu]
  std::vector<double> phi;    // [site]; all zero in the unitary sector

  static FieldConfiguration cold(std::shared_ptr<const LatticeGeometry> g,
                                 Sector sector);

  const LatticeGeometry& g() const { return *geom; }
};

// theta'_{x,mu} = theta_{x,mu} + lambda_{x+mu} - lambda_x,
// phi'_x = phi_x + lambda_x, both reduced mod 2*pi. For a unitary-sector
// input only lambda == 0 keeps the sector consistent; anything else throws.
FieldConfiguration gauge_transform(const FieldConfiguration& cfg,
                                   const std::vector<double>& lambda);

// The gauge choice lambda_x = -phi_x: absorbs the Higgs phase into the
// links and returns a unitary-sector configuration with the same action.
FieldConfiguration to_unitary_gauge(const FieldConfiguration& cfg);

// Snapshot format (binary, little-endian):
//   bytes 0..7   magic "LGHCFG1\n"
//   int32[4]     extents
//   int32        sector (0 = unitary, 1 = higgs)
//   float64[4V]  theta, link order site*4 + mu, sites lexicographic
//   float64[V]   phi
void save_config(const FieldConfiguration& cfg, const std::string& path);
FieldConfiguration load_config(const std::string& path);

}  // namespace lgh

#pragma once

#include <memory>

#include "lgh/couplings.hpp"
#include "lgh/engine.hpp"
#include "lgh/rng.hpp"

namespace lgh::testing {

inline std::shared_ptr<const LatticeGeometry> make_geom(int extent) {
  return std::make_shared<LatticeGeometry>(LatticeGeometry::cubic(extent));
}

inline FieldConfiguration random_config(
    std::shared_ptr<const LatticeGeometry> geom, Sector sector, Rng& rng) {
  FieldConfiguration cfg = FieldConfiguration::cold(std::move(geom), sector);
  for (double& t : cfg.theta) t = rng.uniform(0.0, kTwoPi);
  if (sector == Sector::higgs)
    for (double& p : cfg.phi) p = rng.uniform(0.0, kTwoPi);
  return cfg;
}

inline Couplings random_couplings(Rng& rng) {
  Couplings cpl;
  for (double& c : cpl.c1) c = rng.uniform(-1.0, 1.0);
  for (double& c : cpl.c2) c = rng.uniform(-1.0, 1.0);
  for (double& c : cpl.c3) c = rng.uniform(-1.0, 1.0);
  return cpl;
}

}  // namespace lgh::testing

#include "lgh/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lgh {

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod result can round up to the period
  return r;
}

int plane_index(int mu, int nu) {
  if (mu > nu) std::swap(mu, nu);
  // (0,1)->0 (0,2)->1 (0,3)->2 (1,2)->3 (1,3)->4 (2,3)->5
  static constexpr int table[4][4] = {{-1, 0, 1, 2},
                                      {0, -1, 3, 4},
                                      {1, 3, -1, 5},
                                      {2, 4, 5, -1}};
  return table[mu][nu];
}

LatticeGeometry::LatticeGeometry(const std::array<int, 4>& extents)
    : extent_(extents) {
  volume_ = 1;
  for (int mu = 0; mu < 4; ++mu) {
    if (extent_[mu] < 2)
      throw std::invalid_argument("lattice extent must be >= 2 in every direction");
    volume_ *= extent_[mu];
  }
  up_.resize(static_cast<std::size_t>(volume_) * 4);
  dn_.resize(static_cast<std::size_t>(volume_) * 4);
  for (int s = 0; s < volume_; ++s) {
    const auto c = site_coords(s);
    for (int mu = 0; mu < 4; ++mu) {
      auto cu = c, cd = c;
      cu[mu] = (c[mu] + 1) % extent_[mu];
      cd[mu] = (c[mu] - 1 + extent_[mu]) % extent_[mu];
      up_[s * 4 + mu] = static_cast<std::int32_t>(site_index(cu));
      dn_[s * 4 + mu] = static_cast<std::int32_t>(site_index(cd));
    }
  }
}

LatticeGeometry LatticeGeometry::cubic(int extent) {
  return LatticeGeometry({extent, extent, extent, extent});
}

int LatticeGeometry::site_index(const std::array<int, 4>& coords) const {
  for (int mu = 0; mu < 4; ++mu) {
    if (coords[mu] < 0 || coords[mu] >= extent_[mu])
      throw std::out_of_range("site coordinate " + std::to_string(coords[mu]) +
                              " outside [0, " + std::to_string(extent_[mu]) +
                              ") in direction " + std::to_string(mu));
  }
  // x1 fastest
  return coords[0] +
         extent_[0] * (coords[1] + extent_[1] * (coords[2] + extent_[2] * coords[3]));
}

std::array<int, 4> LatticeGeometry::site_coords(int site) const {
  std::array<int, 4> c{};
  for (int mu = 0; mu < 4; ++mu) {
    c[mu] = site % extent_[mu];
    site /= extent_[mu];
  }
  return c;
}

}  // namespace lgh

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace lgh {

// Directions are indexed 0..3. Direction 3 is the imaginary-time direction
// (the "4th" axis); 0..2 are spatial. This mapping is used everywhere.
inline constexpr int kDim = 4;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;

// Canonical reduction of an angle to [0, 2*pi). Safe for any finite input.
double wrap_angle(double x);

// Unordered pair of distinct directions, stored with mu < nu.
struct PlanePair {
  int mu;
  int nu;
};

// The six planes of a 4D lattice, in lexicographic order. A plane is
// "temporal" when nu == 3.
inline constexpr std::array<PlanePair, 6> kPlanePairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Index into kPlanePairs; arguments may come in either order.
int plane_index(int mu, int nu);

inline bool is_temporal_plane(PlanePair p) { return p.nu == 3; }

// 4D periodic hypercubic lattice. Sites are numbered lexicographically with
// x1 (direction 0) varying fastest. Links are numbered site*4 + direction.
// Neighbor lookups are precomputed tables, so instances are cheap to query
// and safe to share across threads read-only.
class LatticeGeometry {
 public:
  explicit LatticeGeometry(const std::array<int, 4>& extents);
  static LatticeGeometry cubic(int extent);  // L^4

  const std::array<int, 4>& extents() const { return extent_; }
  int extent(int mu) const { return extent_[mu]; }
  int volume() const { return volume_; }
  int link_count() const { return 4 * volume_; }
  int plaquette_count() const { return 6 * volume_; }

  // Throws std::out_of_range if any coordinate is outside [0, extent).
  int site_index(const std::array<int, 4>& coords) const;
  std::array<int, 4> site_coords(int site) const;

  // Nearest neighbor of `site` one step along mu; sign is +1 or -1.
  int neighbor(int site, int mu, int sign) const {
    return sign > 0 ? up_[site * 4 + mu] : dn_[site * 4 + mu];
  }
  int up(int site, int mu) const { return up_[site * 4 + mu]; }
  int dn(int site, int mu) const { return dn_[site * 4 + mu]; }

  int link_index(int site, int mu) const { return site * 4 + mu; }

 private:
  std::array<int, 4> extent_;
  int volume_;
  std::vector<std::int32_t> up_, dn_;  // [site*4 + mu]
};

}  // namespace lgh

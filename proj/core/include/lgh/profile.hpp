#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lgh {

// Static-charge density profiles on a 3D periodic grid: the electric field
// of a +q/-q source pair in each phase, and the per-site density deviation
// it induces. The three kernels model the three phase responses
// (potential 1/r, exp(-m r)/r, and a linear flux string).
enum class PhaseKernel { coulomb, higgs, confinement };

PhaseKernel phase_kernel_from_string(std::string_view name);
std::string to_string(PhaseKernel kernel);

// Source coordinates are fractions of the box half-width relative to the
// center: fraction f on an axis of extent n maps to site
// round(n/2 + f*n/2) mod n.
int map_fraction_to_site(double fraction, int extent);

struct ChargeProfileSpec {
  std::array<int, 3> grid{16, 16, 16};
  PhaseKernel kernel = PhaseKernel::coulomb;
  double screening_mass = 1.0;  // higgs kernel only; must be > 0
  std::array<double, 3> source_plus{0.4, 0, 0};
  std::array<double, 3> source_minus{-0.4, 0, 0};
  double charge_q = 1.0;
  double rho1 = 1.0;  // external source strength; fields scale with q*rho1
};

// E on the positive links of the grid, laid out [site*3 + i] with sites
// lexicographic (x1 fastest).
struct LinkField3D {
  std::array<int, 3> n{};
  std::vector<double> e;
  int site_index(std::array<int, 3> c) const {
    return c[0] + n[0] * (c[1] + n[1] * c[2]);
  }
  int volume() const { return n[0] * n[1] * n[2]; }
};

struct SiteField3D {
  std::array<int, 3> n{};
  std::vector<double> v;
  int site_index(std::array<int, 3> c) const {
    return c[0] + n[0] * (c[1] + n[1] * c[2]);
  }
};

// coulomb: E = -grad(Phi), Laplacian(Phi) = -q(delta_+ - delta_-), zero-mean
//          Phi on the periodic grid (the +- pair makes the rhs compatible).
// higgs:   same with (Laplacian - m^2).
// confinement: flux q on the shortest axis-aligned path from + to -.
// The discrete divergence of E at the sources is +-q (times rho1) to the
// solver tolerance of 1e-8. Throws on CG non-convergence.
LinkField3D solve_static_field(const ChargeProfileSpec& spec);

// Sum of forward differences of E at `site`: div E = sum_i (E_{r,i} - E_{r-i,i}).
double divergence(const LinkField3D& field, std::array<int, 3> site);

// Delta rho_r = sqrt(sum_i eta_{r,i}^2 / 3) with eta = -E over the three
// links emanating from r in the positive directions.
SiteField3D density_deviation(const LinkField3D& field);

// Writes the x3 = plane slice as comma-separated rows (row = x2, column =
// x1), with '#' header lines recording the spec when given.
void export_contour_slice(const SiteField3D& field, int x3_plane,
                          std::ostream& out,
                          const ChargeProfileSpec* header_spec = nullptr);

}  // namespace lgh

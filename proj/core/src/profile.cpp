#include "lgh/profile.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lgh {

PhaseKernel phase_kernel_from_string(std::string_view name) {
  if (name == "coulomb") return PhaseKernel::coulomb;
  if (name == "higgs") return PhaseKernel::higgs;
  if (name == "confinement") return PhaseKernel::confinement;
  throw std::invalid_argument("unknown profile kernel '" + std::string(name) +
                              "' (expected coulomb, higgs or confinement)");
}

std::string to_string(PhaseKernel kernel) {
  switch (kernel) {
    case PhaseKernel::coulomb: return "coulomb";
    case PhaseKernel::higgs: return "higgs";
    case PhaseKernel::confinement: return "confinement";
  }
  return "?";
}

int map_fraction_to_site(double fraction, int extent) {
  const double x = 0.5 * extent + 0.5 * extent * fraction;
  const int site = static_cast<int>(std::lround(x));
  return ((site % extent) + extent) % extent;
}

namespace {

struct Grid3 {
  std::array<int, 3> n;
  int volume() const { return n[0] * n[1] * n[2]; }
  int idx(std::array<int, 3> c) const {
    return c[0] + n[0] * (c[1] + n[1] * c[2]);
  }
  int shift(int s, int axis, int d) const {
    std::array<int, 3> c{s % n[0], (s / n[0]) % n[1], s / (n[0] * n[1])};
    c[axis] = ((c[axis] + d) % n[axis] + n[axis]) % n[axis];
    return idx(c);
  }
};

// y = (-Laplacian + msq) x on the periodic grid
void apply_operator(const Grid3& g, double msq, const std::vector<double>& x,
                    std::vector<double>& y) {
  const int v = g.volume();
  for (int s = 0; s < v; ++s) {
    double lap = -6.0 * x[s];
    for (int i = 0; i < 3; ++i)
      lap += x[g.shift(s, i, +1)] + x[g.shift(s, i, -1)];
    y[s] = -lap + msq * x[s];
  }
}

void subtract_mean(std::vector<double>& x) {
  double m = 0;
  for (double v : x) m += v;
  m /= static_cast<double>(x.size());
  for (double& v : x) v -= m;
}

// Plain conjugate gradient; the msq = 0 operator is solved in the zero-mean
// subspace (the rhs is compatible by construction of the +-q pair).
std::vector<double> solve_cg(const Grid3& g, double msq,
                             std::vector<double> rhs) {
  const int v = g.volume();
  const bool singular = msq == 0.0;
  if (singular) subtract_mean(rhs);

  std::vector<double> x(v, 0.0), r = rhs, p = rhs, ap(v);
  double rr = 0;
  for (double val : r) rr += val * val;
  double b2 = rr;
  const double tol2 = 1e-20 * std::max(1.0, b2);  // ||r|| <= 1e-10 max(1,||b||)

  const int max_iter = 20 * v + 100;
  for (int it = 0; it < max_iter; ++it) {
    if (rr <= tol2) {
      if (singular) subtract_mean(x);
      return x;
    }
    apply_operator(g, msq, p, ap);
    double pap = 0;
    for (int s = 0; s < v; ++s) pap += p[s] * ap[s];
    const double alpha = rr / pap;
    for (int s = 0; s < v; ++s) {
      x[s] += alpha * p[s];
      r[s] -= alpha * ap[s];
    }
    if (singular && (it % 50 == 49)) {
      subtract_mean(x);
      subtract_mean(r);
    }
    double rr_new = 0;
    for (double val : r) rr_new += val * val;
    const double beta = rr_new / rr;
    rr = rr_new;
    for (int s = 0; s < v; ++s) p[s] = r[s] + beta * p[s];
  }
  throw std::runtime_error("static-field solver did not converge");
}

// Flux q along the shortest axis-aligned path from `from` to `to`, walking
// axis by axis and taking the shorter way around each periodic direction.
void lay_string(const Grid3& g, std::array<int, 3> from, std::array<int, 3> to,
                double q, std::vector<double>& e) {
  std::array<int, 3> pos = from;
  for (int axis = 0; axis < 3; ++axis) {
    const int n = g.n[axis];
    int d = ((to[axis] - pos[axis]) % n + n) % n;  // steps in + direction
    int step = +1;
    if (d > n / 2) {
      d = n - d;
      step = -1;
    }
    for (int k = 0; k < d; ++k) {
      if (step > 0) {
        e[g.idx(pos) * 3 + axis] += q;  // link (pos, pos + axis)
        pos[axis] = (pos[axis] + 1) % n;
      } else {
        pos[axis] = (pos[axis] - 1 + n) % n;
        e[g.idx(pos) * 3 + axis] -= q;  // link (pos, pos + axis), traversed backwards
      }
    }
  }
}

}  // namespace

LinkField3D solve_static_field(const ChargeProfileSpec& spec) {
  Grid3 g{spec.grid};
  for (int i = 0; i < 3; ++i)
    if (g.n[i] < 2)
      throw std::invalid_argument("profile grid extents must be >= 2");
  std::array<int, 3> sp{}, sm{};
  for (int i = 0; i < 3; ++i) {
    sp[i] = map_fraction_to_site(spec.source_plus[i], g.n[i]);
    sm[i] = map_fraction_to_site(spec.source_minus[i], g.n[i]);
  }
  if (sp == sm)
    throw std::invalid_argument("profile sources map to the same site");

  LinkField3D field;
  field.n = g.n;
  field.e.assign(static_cast<std::size_t>(g.volume()) * 3, 0.0);
  const double q = spec.charge_q * spec.rho1;

  if (spec.kernel == PhaseKernel::confinement) {
    lay_string(g, sp, sm, q, field.e);
    return field;
  }

  double msq = 0.0;
  if (spec.kernel == PhaseKernel::higgs) {
    if (!(spec.screening_mass > 0))
      throw std::invalid_argument("screening mass must be > 0");
    msq = spec.screening_mass * spec.screening_mass;
  }

  std::vector<double> rhs(g.volume(), 0.0);
  rhs[g.idx(sp)] += q;
  rhs[g.idx(sm)] -= q;
  const std::vector<double> phi = solve_cg(g, msq, std::move(rhs));

  // E = -grad(phi) on positive links
  for (int s = 0; s < g.volume(); ++s)
    for (int i = 0; i < 3; ++i)
      field.e[s * 3 + i] = -(phi[g.shift(s, i, +1)] - phi[s]);
  return field;
}

double divergence(const LinkField3D& field, std::array<int, 3> site) {
  Grid3 g{field.n};
  const int s = g.idx(site);
  double div = 0.0;
  for (int i = 0; i < 3; ++i)
    div += field.e[s * 3 + i] - field.e[g.shift(s, i, -1) * 3 + i];
  return div;
}

SiteField3D density_deviation(const LinkField3D& field) {
  SiteField3D out;
  out.n = field.n;
  const int v = field.n[0] * field.n[1] * field.n[2];
  out.v.resize(v);
  for (int s = 0; s < v; ++s) {
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double eta = -field.e[s * 3 + i];
      sum += eta * eta;
    }
    out.v[s] = std::sqrt(sum / 3.0);
  }
  return out;
}

void export_contour_slice(const SiteField3D& field, int x3_plane,
                          std::ostream& out,
                          const ChargeProfileSpec* spec) {
  if (x3_plane < 0 || x3_plane >= field.n[2])
    throw std::invalid_argument("slice plane outside the grid");
  if (spec) {
    out << "# density deviation slice, x3 = " << x3_plane << "\n";
    out << "# kernel = " << to_string(spec->kernel) << "\n";
    out << "# grid = " << spec->grid[0] << " " << spec->grid[1] << " "
        << spec->grid[2] << "\n";
    if (spec->kernel == PhaseKernel::higgs)
      out << "# screening_mass = " << spec->screening_mass << "\n";
    out << "# q = " << spec->charge_q << ", rho1 = " << spec->rho1 << "\n";
    out << "# source_plus = " << spec->source_plus[0] << " "
        << spec->source_plus[1] << " " << spec->source_plus[2] << "\n";
    out << "# source_minus = " << spec->source_minus[0] << " "
        << spec->source_minus[1] << " " << spec->source_minus[2] << "\n";
    out << "# row = x2, column = x1\n";
  }
  for (int x2 = 0; x2 < field.n[1]; ++x2) {
    for (int x1 = 0; x1 < field.n[0]; ++x1) {
      if (x1) out << ',';
      out << field.v[field.site_index({x1, x2, x3_plane})];
    }
    out << '\n';
  }
}

}  // namespace lgh

#include "lgh/sweep_kernel.hpp"

#include <cmath>

namespace lgh {

namespace {

struct C2 {
  double re, im;
};
inline C2 mul(C2 a, C2 b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline C2 mulc(C2 a, C2 b) {  // a * conj(b)
  return {a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
}
inline C2 conj(C2 a) { return {a.re, -a.im}; }
inline void acc(C2& w, double c, C2 z) {
  w.re += c * z.re;
  w.im += c * z.im;
}

}  // namespace

SweepKernel::SweepKernel(const LatticeGeometry& g, const Couplings& cpl)
    : g_(&g), cpl_(cpl) {}

void SweepKernel::bind(const FieldConfiguration& cfg) {
  const int nl = g_->link_count();
  const int v = g_->volume();
  higgs_ = cfg.sector == Sector::higgs;
  ct_.resize(nl);
  st_.resize(nl);
  cp_.resize(v);
  sp_.resize(v);
  for (int l = 0; l < nl; ++l) {
    ct_[l] = std::cos(cfg.theta[l]);
    st_[l] = std::sin(cfg.theta[l]);
  }
  for (int s = 0; s < v; ++s) {
    cp_[s] = std::cos(cfg.phi[s]);
    sp_[s] = std::sin(cfg.phi[s]);
  }
}

// Every term containing the updated angle x is cos(x + r) or cos(x - r), so
// the local action is Re[exp(i x) W] with W accumulating c*exp(+-i r) from
// cached unit vectors. One delta then costs one sincos and no staple trig.
double SweepKernel::link_delta(int site, int mu, double new_theta) const {
  const LatticeGeometry& g = *g_;
  auto zt = [&](int s, int d) -> C2 {
    const int l = s * 4 + d;
    return {ct_[l], st_[l]};
  };
  auto zp = [&](int s) -> C2 { return {cp_[s], sp_[s]}; };

  const int sup = g.up(site, mu);
  C2 w{0.0, 0.0};

  if (cpl_.c1[mu] != 0.0) {
    if (higgs_)
      acc(w, cpl_.c1[mu], mulc(zp(site), zp(sup)));
    else
      w.re += cpl_.c1[mu];
  }

  for (int e = 0; e < 4; ++e) {
    if (e == mu) continue;
    const int p = plane_index(mu, e);
    const double c2 = cpl_.c2[p];
    const double c3 = cpl_.c3[p];
    if (c2 == 0.0 && c3 == 0.0) continue;
    const int se = g.up(site, e);
    const int y = g.dn(site, e);
    const int ymu = g.up(y, mu);
    if (c2 != 0.0) {
      // up plaquette: cos(x + [th(sup,e) - th(se,mu) - th(site,e)])
      acc(w, c2, mulc(mulc(zt(sup, e), zt(se, mu)), zt(site, e)));
      // down plaquette: cos(x - [th(ymu,e) - th(y,e) + th(y,mu)])
      acc(w, c2, conj(mul(mulc(zt(ymu, e), zt(y, e)), zt(y, mu))));
    }
    if (c3 != 0.0) {
      if (!higgs_) {
        // with phi = 0 the four L-term rests are single link angles and the
        // mu<e / mu>e enumerations coincide
        acc(w, c3, conj(zt(site, e)));
        acc(w, c3, zt(sup, e));
        acc(w, c3, conj(zt(ymu, e)));
        acc(w, c3, zt(y, e));
      } else if (mu < e) {
        acc(w, c3, mulc(mulc(zp(se), zt(site, e)), zp(sup)));
        acc(w, c3, mulc(mul(zp(site), zt(sup, e)), zp(g.up(sup, e))));
        acc(w, c3, conj(mulc(mul(zp(ymu), zt(ymu, e)), zp(site))));
        acc(w, c3, mulc(mul(zp(y), zt(y, e)), zp(sup)));
      } else {
        acc(w, c3, conj(mulc(mul(zp(sup), zt(site, e)), zp(se))));
        acc(w, c3, mulc(mul(zp(y), zt(y, e)), zp(sup)));
        acc(w, c3, mulc(mulc(zp(site), zt(ymu, e)), zp(ymu)));
        acc(w, c3, mulc(mul(zp(site), zt(sup, e)), zp(g.up(sup, e))));
      }
    }
  }

  const int l = site * 4 + mu;
  return (std::cos(new_theta) - ct_[l]) * w.re -
         (std::sin(new_theta) - st_[l]) * w.im;
}

double SweepKernel::site_delta(int site, double new_phi) const {
  const LatticeGeometry& g = *g_;
  auto zt = [&](int s, int d) -> C2 {
    const int l = s * 4 + d;
    return {ct_[l], st_[l]};
  };
  auto zp = [&](int s) -> C2 { return {cp_[s], sp_[s]}; };

  C2 w{0.0, 0.0};
  for (int mu = 0; mu < 4; ++mu) {
    const double c1 = cpl_.c1[mu];
    if (c1 == 0.0) continue;
    const int sup = g.up(site, mu), sdn = g.dn(site, mu);
    acc(w, c1, mulc(zt(site, mu), zp(sup)));
    acc(w, c1, conj(mul(zp(sdn), zt(sdn, mu))));
  }
  for (int p = 0; p < 6; ++p) {
    const double c = cpl_.c3[p];
    if (c == 0.0) continue;
    const auto [a, b] = kPlanePairs[p];
    const int sa = g.up(site, a), sb = g.up(site, b);
    const int da = g.dn(site, a), db = g.dn(site, b);
    const int dab = g.dn(da, b);  // s - a - b
    const int sba = g.up(db, a);  // s - b + a
    const int sab = g.up(da, b);  // s - a + b
    // T1
    acc(w, c, mulc(mulc(zt(db, a), zt(db, b)), zp(sba)));
    acc(w, c, conj(mulc(mul(zp(sab), zt(da, a)), zt(da, b))));
    // T2
    acc(w, c, mulc(mul(zt(site, a), zt(sa, b)), zp(g.up(sa, b))));
    acc(w, c, conj(mul(mul(zp(dab), zt(dab, a)), zt(g.up(dab, a), b))));
    // T3
    acc(w, c, mulc(mulc(zt(site, b), zt(sab, a)), zp(sab)));
    acc(w, c, conj(mulc(mul(zp(sba), zt(sba, b)), zt(site, a))));
    // T4
    acc(w, c, mulc(mul(zt(site, b), zt(sb, a)), zp(g.up(sb, a))));
    acc(w, c, conj(mul(mul(zp(dab), zt(dab, b)), zt(g.up(dab, b), a))));
  }
  return (std::cos(new_phi) - cp_[site]) * w.re -
         (std::sin(new_phi) - sp_[site]) * w.im;
}

void SweepKernel::commit_link(FieldConfiguration& cfg, int site, int mu,
                              double new_theta) {
  const int l = site * 4 + mu;
  const double wrapped = wrap_angle(new_theta);
  cfg.theta[l] = wrapped;
  ct_[l] = std::cos(wrapped);
  st_[l] = std::sin(wrapped);
}

void SweepKernel::commit_site(FieldConfiguration& cfg, int site,
                              double new_phi) {
  const double wrapped = wrap_angle(new_phi);
  cfg.phi[site] = wrapped;
  cp_[site] = std::cos(wrapped);
  sp_[site] = std::sin(wrapped);
}

}  // namespace lgh

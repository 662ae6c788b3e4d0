#include "lgh/action.hpp"

#include <cmath>
#include <stdexcept>

namespace lgh {

namespace {

void check_sizes(const FieldConfiguration& cfg) {
  const auto& g = cfg.g();
  if (static_cast<int>(cfg.theta.size()) != g.link_count() ||
      static_cast<int>(cfg.phi.size()) != g.volume())
    throw std::invalid_argument(
        "field configuration arrays do not match the geometry");
}

}  // namespace

double plaquette_angle(const FieldConfiguration& cfg, int site,
                       PlanePair plane) {
  const auto& g = cfg.g();
  const int mu = plane.mu, nu = plane.nu;
  const int smu = g.up(site, mu), snu = g.up(site, nu);
  return cfg.theta[smu * 4 + nu] - cfg.theta[site * 4 + nu] -
         (cfg.theta[snu * 4 + mu] - cfg.theta[site * 4 + mu]);
}

ActionComponents total_action_components(const FieldConfiguration& cfg,
                                         const Couplings& cpl) {
  check_sizes(cfg);
  const auto& g = cfg.g();
  const auto& th = cfg.theta;
  const auto& ph = cfg.phi;
  ActionComponents acc;
  for (int s = 0; s < g.volume(); ++s) {
    for (int mu = 0; mu < 4; ++mu) {
      if (cpl.c1[mu] == 0.0) continue;
      acc.link_term +=
          cpl.c1[mu] * std::cos(ph[s] + th[s * 4 + mu] - ph[g.up(s, mu)]);
    }
    for (int p = 0; p < 6; ++p) {
      const auto [mu, nu] = kPlanePairs[p];
      const int smu = g.up(s, mu), snu = g.up(s, nu);
      if (cpl.c2[p] != 0.0) {
        const double ang = th[smu * 4 + nu] - th[s * 4 + nu] -
                           th[snu * 4 + mu] + th[s * 4 + mu];
        acc.plaquette_term += cpl.c2[p] * std::cos(ang);
      }
      if (cpl.c3[p] != 0.0) {
        const int smunu = g.up(smu, nu);
        const double t_smu = th[s * 4 + mu], t_snu = th[s * 4 + nu];
        const double t_up_mu = th[smu * 4 + nu], t_up_nu = th[snu * 4 + mu];
        const double sum = std::cos(ph[snu] + t_smu - t_snu - ph[smu]) +
                           std::cos(ph[s] + t_smu + t_up_mu - ph[smunu]) +
                           std::cos(ph[smu] + t_up_mu - t_up_nu - ph[snu]) +
                           std::cos(ph[s] + t_snu + t_up_nu - ph[smunu]);
        acc.l_term += cpl.c3[p] * sum;
      }
    }
  }
  return acc;
}

double total_action(const FieldConfiguration& cfg, const Couplings& cpl) {
  return total_action_components(cfg, cpl).total();
}

double link_action_delta(const FieldConfiguration& cfg, int site, int mu,
                         double new_theta, const Couplings& cpl) {
  const auto& g = cfg.g();
  const auto& th = cfg.theta;
  const auto& ph = cfg.phi;
  const double ot = th[site * 4 + mu];
  const int sup = g.up(site, mu);
  double delta = 0.0;

  // terms are written as cos(theta +- rest); accumulate cos(new) - cos(old)
  auto add = [&](double c, double rest, int sign) {
    if (sign > 0)
      delta += c * (std::cos(new_theta + rest) - std::cos(ot + rest));
    else
      delta += c * (std::cos(new_theta - rest) - std::cos(ot - rest));
  };

  if (cpl.c1[mu] != 0.0) add(cpl.c1[mu], ph[site] - ph[sup], +1);

  for (int e = 0; e < 4; ++e) {
    if (e == mu) continue;
    const int p = plane_index(mu, e);
    const int se = g.up(site, e);
    const int y = g.dn(site, e);  // base of the lower plaquette
    if (cpl.c2[p] != 0.0) {
      const int yup = g.up(y, mu);
      add(cpl.c2[p], th[sup * 4 + e] - th[se * 4 + mu] - th[site * 4 + e], +1);
      add(cpl.c2[p], th[yup * 4 + e] - th[y * 4 + e] + th[y * 4 + mu], -1);
    }
    if (cpl.c3[p] != 0.0) {
      const double c = cpl.c3[p];
      if (mu < e) {
        // link direction is the first slot of the canonical pair (mu, e)
        const int ymu = g.up(y, mu);
        add(c, ph[se] - th[site * 4 + e] - ph[sup], +1);
        add(c, ph[site] + th[sup * 4 + e] - ph[g.up(sup, e)], +1);
        add(c, ph[ymu] + th[ymu * 4 + e] - ph[site], -1);
        add(c, ph[y] + th[y * 4 + e] - ph[sup], +1);
      } else {
        // link direction is the second slot of the canonical pair (e, mu)
        const int ye = y;   // this y is s - e: the base used by B2/B3
        const int yee = g.up(ye, mu);  // s - e + mu
        add(c, ph[sup] + th[site * 4 + e] - ph[se], -1);
        add(c, ph[ye] + th[ye * 4 + e] - ph[sup], +1);
        add(c, ph[site] - th[yee * 4 + e] - ph[yee], +1);
        add(c, ph[site] + th[sup * 4 + e] - ph[g.up(sup, e)], +1);
      }
    }
  }
  return delta;
}

double site_action_delta(const FieldConfiguration& cfg, int site,
                         double new_phi, const Couplings& cpl) {
  if (cfg.sector != Sector::higgs)
    throw std::logic_error("site_action_delta requires the higgs sector");
  const auto& g = cfg.g();
  const auto& th = cfg.theta;
  const auto& ph = cfg.phi;
  const double op = ph[site];
  double delta = 0.0;

  auto add = [&](double c, double rest, int sign) {
    if (sign > 0)
      delta += c * (std::cos(new_phi + rest) - std::cos(op + rest));
    else
      delta += c * (std::cos(new_phi - rest) - std::cos(op - rest));
  };

  for (int mu = 0; mu < 4; ++mu) {
    if (cpl.c1[mu] == 0.0) continue;
    const int sup = g.up(site, mu), sdn = g.dn(site, mu);
    add(cpl.c1[mu], th[site * 4 + mu] - ph[sup], +1);
    add(cpl.c1[mu], ph[sdn] + th[sdn * 4 + mu], -1);
  }

  for (int p = 0; p < 6; ++p) {
    const double c = cpl.c3[p];
    if (c == 0.0) continue;
    const auto [a, b] = kPlanePairs[p];
    const int sa = g.up(site, a), sb = g.up(site, b);
    const int da = g.dn(site, a), db = g.dn(site, b);
    const int dab = g.dn(da, b);  // s - a - b
    // T1: roles x+b (base s-b) and x+a (base s-a)
    add(c, th[db * 4 + a] - th[db * 4 + b] - ph[g.up(db, a)], +1);
    add(c, ph[g.up(da, b)] + th[da * 4 + a] - th[da * 4 + b], -1);
    // T2: roles x (base s) and x+a+b (base s-a-b)
    add(c, th[site * 4 + a] + th[sa * 4 + b] - ph[g.up(sa, b)], +1);
    add(c, ph[dab] + th[dab * 4 + a] + th[g.up(dab, a) * 4 + b], -1);
    // T3: roles x+a (base s-a) and x+b (base s-b)
    add(c, th[site * 4 + b] - th[g.up(da, b) * 4 + a] - ph[g.up(da, b)], +1);
    add(c, ph[g.up(db, a)] + th[g.up(db, a) * 4 + b] - th[site * 4 + a], -1);
    // T4: roles x (base s) and x+b+a (base s-a-b)
    add(c, th[site * 4 + b] + th[sb * 4 + a] - ph[g.up(sb, a)], +1);
    add(c, ph[dab] + th[dab * 4 + b] + th[g.up(dab, b) * 4 + a], -1);
  }
  return delta;
}

}  // namespace lgh

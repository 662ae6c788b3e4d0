#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "lgh/action.hpp"
#include "lgh/oracles.hpp"
#include "test_helpers.hpp"

using namespace lgh;
using lgh::testing::make_geom;
using lgh::testing::random_config;
using lgh::testing::random_couplings;

TEST_SUITE_BEGIN("model");

namespace {
constexpr int kTime = 3;
const std::array<int, 3> kSpatial{0, 1, 2};
}  // namespace

TEST_CASE("preset IP fills everything isotropically and zeroes c3") {
  const Couplings c = preset_couplings(ModelPreset::IP, 0.5, 1.0, 7.7);
  for (int mu = 0; mu < 4; ++mu) CHECK(c.c1[mu] == 0.5);
  for (int p = 0; p < 6; ++p) {
    CHECK(c.c2[p] == 1.0);
    CHECK(c.c3[p] == 0.0);
  }
}

TEST_CASE("preset ItPtLs keeps temporal links/planes and spatial L-terms") {
  const Couplings c = preset_couplings(ModelPreset::ItPtLs, 0.4, 0.7, 0.4);
  CHECK(c.c1[kTime] == 0.4);
  for (int i : kSpatial) CHECK(c.c1[i] == 0.0);
  for (int p = 0; p < 6; ++p) {
    const bool temporal = is_temporal_plane(kPlanePairs[p]);
    CHECK(c.c2[p] == (temporal ? 0.7 : 0.0));
    CHECK(c.c3[p] == (temporal ? 0.0 : 0.4));
  }
}

TEST_CASE("preset ItPLs adds the spatial plaquettes") {
  const Couplings c = preset_couplings(ModelPreset::ItPLs, 0.4, 0.7, 0.2);
  CHECK(c.c1[kTime] == 0.4);
  for (int i : kSpatial) CHECK(c.c1[i] == 0.0);
  for (int p = 0; p < 6; ++p) {
    CHECK(c.c2[p] == 0.7);
    CHECK(c.c3[p] == (is_temporal_plane(kPlanePairs[p]) ? 0.0 : 0.2));
  }
}

TEST_CASE("preset PL ignores c1 and fills c2, c3 everywhere") {
  const Couplings c = preset_couplings(ModelPreset::PL, 123.0, 1.0, 0.2);
  for (int mu = 0; mu < 4; ++mu) CHECK(c.c1[mu] == 0.0);
  for (int p = 0; p < 6; ++p) {
    CHECK(c.c2[p] == 1.0);
    CHECK(c.c3[p] == 0.2);
  }
}

TEST_CASE("plaquette angle vanishes for flat configurations") {
  auto geom = make_geom(3);
  FieldConfiguration cfg = FieldConfiguration::cold(geom, Sector::unitary);
  CHECK(plaquette_angle(cfg, 0, kPlanePairs[0]) == 0.0);
  for (double& t : cfg.theta) t = 1.3;  // constant on every link: differences cancel
  for (int s = 0; s < geom->volume(); ++s)
    for (const auto& p : kPlanePairs)
      CHECK(plaquette_angle(cfg, s, p) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("cos(plaquette) is gauge invariant") {
  auto geom = make_geom(3);
  Rng rng(21);
  const FieldConfiguration cfg = random_config(geom, Sector::higgs, rng);
  std::vector<double> lambda(geom->volume());
  for (double& l : lambda) l = rng.uniform(0.0, kTwoPi);
  const FieldConfiguration moved = gauge_transform(cfg, lambda);
  for (int s = 0; s < geom->volume(); s += 7)
    for (const auto& p : kPlanePairs)
      CHECK(std::cos(plaquette_angle(moved, s, p)) ==
            doctest::Approx(std::cos(plaquette_angle(cfg, s, p))).epsilon(1e-10));
}

TEST_CASE("cold-config closed forms: Model IP at L=2") {
  auto geom = make_geom(2);
  const FieldConfiguration cfg = FieldConfiguration::cold(geom, Sector::unitary);
  const Couplings cpl = preset_couplings(ModelPreset::IP, 0.5, 1.0, 0.0);
  // (4*0.5 + 6*1.0) * 16 sites
  CHECK(total_action(cfg, cpl) == doctest::Approx(128.0).epsilon(1e-14));
}

TEST_CASE("cold-config closed forms: Model PL at L=2 counts 24V L-terms") {
  auto geom = make_geom(2);
  const FieldConfiguration cfg = FieldConfiguration::cold(geom, Sector::unitary);
  const Couplings cpl = preset_couplings(ModelPreset::PL, 0.0, 1.0, 0.25);
  // (6*1.0 + 24*0.25) * 16 sites
  CHECK(total_action(cfg, cpl) == doctest::Approx(192.0).epsilon(1e-14));
}

TEST_CASE("total_action matches the brute-force oracle on random configs") {
  Rng rng(2024);
  for (int extent : {2, 3}) {
    auto geom = make_geom(extent);
    for (Sector sec : {Sector::unitary, Sector::higgs}) {
      for (int rep = 0; rep < 20; ++rep) {
        const FieldConfiguration cfg = random_config(geom, sec, rng);
        const Couplings cpl = random_couplings(rng);
        const double a = total_action(cfg, cpl);
        const double b = brute_force_action(cfg, cpl);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
      }
    }
  }
}

TEST_CASE("link delta: no-op proposal gives exactly zero") {
  Rng rng(5);
  auto geom = make_geom(2);
  const FieldConfiguration cfg = random_config(geom, Sector::higgs, rng);
  const Couplings cpl = random_couplings(rng);
  CHECK(link_action_delta(cfg, 7, 2, cfg.theta[7 * 4 + 2], cpl) == 0.0);
  CHECK(site_action_delta(cfg, 9, cfg.phi[9], cpl) == 0.0);
}

TEST_CASE("link delta closed form: one link flipped to pi on a cold IP config") {
  auto geom = make_geom(2);
  const FieldConfiguration cfg = FieldConfiguration::cold(geom, Sector::unitary);
  const Couplings cpl = preset_couplings(ModelPreset::IP, 0.3, 0.9, 0.0);
  const double expect = -2.0 * 0.3 - 12.0 * 0.9;
  CHECK(link_action_delta(cfg, 5, 1, kPi, cpl) ==
        doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("site delta closed form: one phi set to pi on a cold IP config") {
  auto geom = make_geom(2);
  const FieldConfiguration cfg = FieldConfiguration::cold(geom, Sector::higgs);
  const Couplings cpl = preset_couplings(ModelPreset::IP, 0.3, 0.9, 0.0);
  CHECK(site_action_delta(cfg, 11, kPi, cpl) ==
        doctest::Approx(-16.0 * 0.3).epsilon(1e-13));
}

TEST_CASE("local deltas equal global recomputation (primary correctness test)") {
  Rng rng(77);
  for (int extent : {2, 4}) {
    auto geom = make_geom(extent);
    for (int rep = 0; rep < 60; ++rep) {
      FieldConfiguration cfg = random_config(geom, Sector::higgs, rng);
      const Couplings cpl = random_couplings(rng);
      const double before = total_action(cfg, cpl);

      const int s = static_cast<int>(rng.uniform01() * geom->volume());
      const int mu = static_cast<int>(rng.uniform01() * 4);
      const double nt = rng.uniform(0.0, kTwoPi);
      FieldConfiguration moved = cfg;
      moved.theta[s * 4 + mu] = nt;
      CHECK(std::abs(link_action_delta(cfg, s, mu, nt, cpl) -
                     (total_action(moved, cpl) - before)) <= 1e-10);

      const double np = rng.uniform(0.0, kTwoPi);
      FieldConfiguration moved2 = cfg;
      moved2.phi[s] = np;
      CHECK(std::abs(site_action_delta(cfg, s, np, cpl) -
                     (total_action(moved2, cpl) - before)) <= 1e-10);
    }
  }
}

TEST_CASE("site delta refuses the unitary sector") {
  auto geom = make_geom(2);
  const FieldConfiguration cfg = FieldConfiguration::cold(geom, Sector::unitary);
  const Couplings cpl = preset_couplings(ModelPreset::IP, 0.3, 0.9, 0.0);
  CHECK_THROWS_AS(site_action_delta(cfg, 0, 1.0, cpl), std::logic_error);
}

TEST_CASE("gauge transform: identity at lambda = 0") {
  Rng rng(31);
  auto geom = make_geom(2);
  const FieldConfiguration cfg = random_config(geom, Sector::higgs, rng);
  const std::vector<double> zero(geom->volume(), 0.0);
  const FieldConfiguration same = gauge_transform(cfg, zero);
  CHECK(same.theta == cfg.theta);
  CHECK(same.phi == cfg.phi);
}

TEST_CASE("gauge transform leaves the action invariant") {
  Rng rng(32);
  auto geom = make_geom(3);
  for (int rep = 0; rep < 10; ++rep) {
    const FieldConfiguration cfg = random_config(geom, Sector::higgs, rng);
    const Couplings cpl = random_couplings(rng);
    std::vector<double> lambda(geom->volume());
    for (double& l : lambda) l = rng.uniform(0.0, kTwoPi);
    const double a = total_action(cfg, cpl);
    const double b = total_action(gauge_transform(cfg, lambda), cpl);
    CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("gauge transform with lambda = -phi reaches the unitary gauge") {
  Rng rng(33);
  auto geom = make_geom(2);
  const FieldConfiguration cfg = random_config(geom, Sector::higgs, rng);
  std::vector<double> lambda(geom->volume());
  for (int s = 0; s < geom->volume(); ++s) lambda[s] = -cfg.phi[s];
  const FieldConfiguration fixed = gauge_transform(cfg, lambda);
  for (double p : fixed.phi) CHECK(p == doctest::Approx(0.0).epsilon(1e-12));
  const FieldConfiguration direct = to_unitary_gauge(cfg);
  for (int l = 0; l < geom->link_count(); ++l)
    CHECK(std::cos(fixed.theta[l]) ==
          doctest::Approx(std::cos(direct.theta[l])).epsilon(1e-12));
}

TEST_CASE("unitary gauge preserves the action and is idempotent") {
  Rng rng(34);
  auto geom = make_geom(3);
  for (int rep = 0; rep < 10; ++rep) {
    const FieldConfiguration cfg = random_config(geom, Sector::higgs, rng);
    const Couplings cpl = random_couplings(rng);
    const FieldConfiguration fixed = to_unitary_gauge(cfg);
    CHECK(fixed.sector == Sector::unitary);
    const double a = total_action(cfg, cpl);
    CHECK(std::abs(total_action(fixed, cpl) - a) <=
          1e-12 * std::max(1.0, std::abs(a)));
    // a config already in the unitary gauge is unchanged
    const FieldConfiguration again = to_unitary_gauge(fixed);
    CHECK(again.theta == fixed.theta);
  }
}

TEST_CASE("gauge_transform then to_unitary_gauge gives the same action") {
  Rng rng(35);
  auto geom = make_geom(2);
  const FieldConfiguration cfg = random_config(geom, Sector::higgs, rng);
  const Couplings cpl = random_couplings(rng);
  std::vector<double> lambda(geom->volume());
  for (double& l : lambda) l = rng.uniform(0.0, kTwoPi);
  const double direct = total_action(to_unitary_gauge(cfg), cpl);
  const double composed =
      total_action(to_unitary_gauge(gauge_transform(cfg, lambda)), cpl);
  CHECK(composed == doctest::Approx(direct).epsilon(1e-11));
}

TEST_CASE("action is invariant under a global phi shift") {
  Rng rng(36);
  auto geom = make_geom(2);
  const FieldConfiguration cfg = random_config(geom, Sector::higgs, rng);
  const Couplings cpl = random_couplings(rng);
  const std::vector<double> constant(geom->volume(), 1.234);
  const double a = total_action(cfg, cpl);
  const double b = total_action(gauge_transform(cfg, constant), cpl);
  CHECK(b == doctest::Approx(a).epsilon(1e-12));
}

TEST_CASE("nonzero lambda on a unitary-sector config is rejected") {
  auto geom = make_geom(2);
  const FieldConfiguration cfg = FieldConfiguration::cold(geom, Sector::unitary);
  std::vector<double> lambda(geom->volume(), 0.5);
  CHECK_THROWS_AS(gauge_transform(cfg, lambda), std::invalid_argument);
}

TEST_CASE("with c1 = c3 = 0 the action reduces to the plaquette form") {
  Rng rng(37);
  auto geom = make_geom(2);
  const FieldConfiguration cfg = random_config(geom, Sector::higgs, rng);
  Couplings cpl;
  cpl.c2.fill(0.75);
  double plaq = 0;
  for (int s = 0; s < geom->volume(); ++s)
    for (const auto& p : kPlanePairs)
      plaq += 0.75 * std::cos(plaquette_angle(cfg, s, p));
  CHECK(total_action(cfg, cpl) == doctest::Approx(plaq).epsilon(1e-12));
}

TEST_CASE("with frozen links the action is an XY model with NN and next-NN couplings") {
  Rng rng(38);
  auto geom = make_geom(3);
  FieldConfiguration cfg = FieldConfiguration::cold(geom, Sector::higgs);
  for (double& p : cfg.phi) p = rng.uniform(0.0, kTwoPi);
  Couplings cpl = random_couplings(rng);
  cpl.c2.fill(0.0);
  const auto& g = *geom;
  double xy = 0;
  for (int s = 0; s < g.volume(); ++s) {
    for (int mu = 0; mu < 4; ++mu)
      xy += cpl.c1[mu] * std::cos(cfg.phi[s] - cfg.phi[g.up(s, mu)]);
    for (int p = 0; p < 6; ++p) {
      const auto [mu, nu] = kPlanePairs[p];
      xy += cpl.c3[p] *
            (2.0 * std::cos(cfg.phi[g.up(s, nu)] - cfg.phi[g.up(s, mu)]) +
             2.0 * std::cos(cfg.phi[s] - cfg.phi[g.up(g.up(s, mu), nu)]));
    }
  }
  CHECK(total_action(cfg, cpl) == doctest::Approx(xy).epsilon(1e-12));
}

TEST_CASE("snapshot round-trips bit-exactly") {
  Rng rng(39);
  auto geom = make_geom(2);
  const FieldConfiguration cfg = random_config(geom, Sector::higgs, rng);
  const std::string path = "model_snapshot_test.snap";
  save_config(cfg, path);
  const FieldConfiguration back = load_config(path);
  CHECK(back.sector == cfg.sector);
  CHECK(back.g().extents() == cfg.g().extents());
  CHECK(back.theta == cfg.theta);
  CHECK(back.phi == cfg.phi);
  std::remove(path.c_str());
}

TEST_SUITE_END();

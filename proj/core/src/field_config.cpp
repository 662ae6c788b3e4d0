#include "lgh/field_config.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace lgh {

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

FieldConfiguration FieldConfiguration::cold(
    std::shared_ptr<const LatticeGeometry> g, Sector sector) {
  FieldConfiguration cfg;
  cfg.geom = std::move(g);
  cfg.sector = sector;
  cfg.theta.assign(cfg.geom->link_count(), 0.0);
  cfg.phi.assign(cfg.geom->volume(), 0.0);
  return cfg;
}

FieldConfiguration gauge_transform(const FieldConfiguration& cfg,
                                   const std::vector<double>& lambda) {
  const auto& g = cfg.g();
  if (static_cast<int>(lambda.size()) != g.volume())
    throw std::invalid_argument("gauge_transform: lambda size != volume");
  if (cfg.sector == Sector::unitary) {
    for (double l : lambda)
      if (l != 0.0)
        throw std::invalid_argument(
            "gauge_transform: nonzero lambda on a unitary-sector configuration");
    return cfg;
  }
  FieldConfiguration out = cfg;
  for (int s = 0; s < g.volume(); ++s) {
    for (int mu = 0; mu < 4; ++mu) {
      const int l = s * 4 + mu;
      out.theta[l] = wrap_angle(cfg.theta[l] + lambda[g.up(s, mu)] - lambda[s]);
    }
    out.phi[s] = wrap_angle(cfg.phi[s] + lambda[s]);
  }
  return out;
}

FieldConfiguration to_unitary_gauge(const FieldConfiguration& cfg) {
  const auto& g = cfg.g();
  FieldConfiguration out = cfg;
  if (cfg.sector == Sector::unitary) return out;
  // lambda_x = -phi_x: theta' = theta + phi_x - phi_{x+mu}, phi' = 0.
  for (int s = 0; s < g.volume(); ++s)
    for (int mu = 0; mu < 4; ++mu) {
      const int l = s * 4 + mu;
      out.theta[l] = wrap_angle(cfg.theta[l] + cfg.phi[s] - cfg.phi[g.up(s, mu)]);
    }
  out.phi.assign(g.volume(), 0.0);
  out.sector = Sector::unitary;
  return out;
}

namespace {
constexpr char kMagic[8] = {'L', 'G', 'H', 'C', 'F', 'G', '1', '\n'};
}

void save_config(const FieldConfiguration& cfg, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(kMagic, sizeof(kMagic));
  std::array<std::int32_t, 4> ext{};
  for (int mu = 0; mu < 4; ++mu) ext[mu] = cfg.g().extent(mu);
  out.write(reinterpret_cast<const char*>(ext.data()), sizeof(ext));
  const std::int32_t sector = cfg.sector == Sector::higgs ? 1 : 0;
  out.write(reinterpret_cast<const char*>(&sector), sizeof(sector));
  out.write(reinterpret_cast<const char*>(cfg.theta.data()),
            static_cast<std::streamsize>(cfg.theta.size() * sizeof(double)));
  out.write(reinterpret_cast<const char*>(cfg.phi.data()),
            static_cast<std::streamsize>(cfg.phi.size() * sizeof(double)));
  if (!out) throw std::runtime_error("short write to '" + path + "'");
}

FieldConfiguration load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("'" + path + "' is not a configuration snapshot");
  std::array<std::int32_t, 4> ext{};
  in.read(reinterpret_cast<char*>(ext.data()), sizeof(ext));
  std::int32_t sector = 0;
  in.read(reinterpret_cast<char*>(&sector), sizeof(sector));
  if (!in) throw std::runtime_error("truncated snapshot '" + path + "'");
  auto geom = std::make_shared<LatticeGeometry>(
      std::array<int, 4>{ext[0], ext[1], ext[2], ext[3]});
  FieldConfiguration cfg = FieldConfiguration::cold(
      std::move(geom), sector == 1 ? Sector::higgs : Sector::unitary);
  in.read(reinterpret_cast<char*>(cfg.theta.data()),
          static_cast<std::streamsize>(cfg.theta.size() * sizeof(double)));
  in.read(reinterpret_cast<char*>(cfg.phi.data()),
          static_cast<std::streamsize>(cfg.phi.size() * sizeof(double)));
  if (!in) throw std::runtime_error("truncated snapshot '" + path + "'");
  return cfg;
}

}  // namespace lgh

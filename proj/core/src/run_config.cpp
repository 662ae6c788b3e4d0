#include "lgh/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lgh/rng.hpp"

namespace lgh {

std::string version_string() { return "0.1.0"; }

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_text(const std::string& text) {
  KeyValueConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                            ": expected 'key = value'",
                        "", lineno);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key", "",
                        lineno);
    if (cfg.entries_.count(key))
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" +
                            key + "'",
                        key, lineno);
    cfg.entries_[key] = Entry{value, lineno, false};
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

bool KeyValueConfig::has(const std::string& key) const {
  return entries_.count(key) != 0;
}

void KeyValueConfig::require(const std::string& key) const {
  if (!entries_.count(key))
    throw ConfigError("missing required key '" + key + "'", key, 0);
}

std::string KeyValueConfig::get_string(const std::string& key,
                                       const std::string& fallback) {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  it->second.consumed = true;
  return it->second.value;
}

std::optional<std::string> KeyValueConfig::get_required_string(
    const std::string& key) {
  require(key);
  return get_string(key, "");
}

double KeyValueConfig::get_real(const std::string& key, double fallback) {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  it->second.consumed = true;
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second.value, &pos);
    if (pos != it->second.value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(it->second.line) + ": key '" +
                          key + "' expects a real number, got '" +
                          it->second.value + "'",
                      key, it->second.line);
  }
}

std::int64_t KeyValueConfig::get_int(const std::string& key,
                                     std::int64_t fallback) {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  it->second.consumed = true;
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(it->second.value, &pos);
    if (pos != it->second.value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(it->second.line) + ": key '" +
                          key + "' expects an integer, got '" +
                          it->second.value + "'",
                      key, it->second.line);
  }
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  it->second.consumed = true;
  const std::string& v = it->second.value;
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw ConfigError("line " + std::to_string(it->second.line) + ": key '" +
                        key + "' expects a boolean (0/1), got '" + v + "'",
                    key, it->second.line);
}

void KeyValueConfig::finish() const {
  for (const auto& [key, entry] : entries_) {
    if (!entry.consumed)
      throw ConfigError("line " + std::to_string(entry.line) +
                            ": unknown key '" + key + "'",
                        key, entry.line);
  }
}

namespace {

Sector sector_from_string(const std::string& name) {
  if (name == "unitary") return Sector::unitary;
  if (name == "higgs") return Sector::higgs;
  throw std::invalid_argument("unknown sector '" + name +
                              "' (expected unitary or higgs)");
}

std::string sector_to_string(Sector s) {
  return s == Sector::higgs ? "higgs" : "unitary";
}

}  // namespace

RunConfig parse_run_config(KeyValueConfig& kv, CliCommand cmd) {
  RunConfig out;
  const bool mc = cmd == CliCommand::scan || cmd == CliCommand::point;

  if (mc) {
    kv.require("model");
    kv.require("L");
  }
  try {
    out.model = model_preset_from_string(kv.get_string("model", "IP"));
    out.sector = sector_from_string(kv.get_string("sector", "unitary"));
    out.run.start = start_kind_from_string(kv.get_string("start", "cold"));
    out.axis = scan_axis_from_string(kv.get_string("axis", "c1"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what(), "", 0);
  }
  out.extent = static_cast<int>(kv.get_int("L", 8));
  if (out.extent < 2) throw ConfigError("L must be >= 2", "L", 0);

  if (cmd == CliCommand::scan) {
    kv.require("lo");
    kv.require("hi");
    kv.require("dc");
  }
  out.lo = kv.get_real("lo", 0.0);
  out.hi = kv.get_real("hi", 0.0);
  out.dc = kv.get_real("dc", 1.0);
  if (cmd == CliCommand::scan) {
    if (!(out.dc > 0)) throw ConfigError("dc must be > 0", "dc", 0);
    if (out.hi < out.lo) throw ConfigError("hi must be >= lo", "hi", 0);
  }

  out.c1 = kv.get_real("c1", 0.0);
  out.c2 = kv.get_real("c2", 0.0);
  out.c3 = kv.get_real("c3", 0.0);

  out.run.therm_sweeps = static_cast<int>(kv.get_int("therm_sweeps", 3000));
  out.run.meas_sweeps = static_cast<int>(kv.get_int("meas_sweeps", 5000));
  out.run.bins = static_cast<int>(kv.get_int("bins", 10));
  out.run.seed = static_cast<std::uint64_t>(kv.get_int("seed", 12345));
  out.run.target_acc_lo = kv.get_real("target_acc_lo", 0.6);
  out.run.target_acc_hi = kv.get_real("target_acc_hi", 0.8);
  if (mc) {
    if (out.run.therm_sweeps < 0 || out.run.meas_sweeps <= 0)
      throw ConfigError("sweep counts must be positive", "meas_sweeps", 0);
    if (out.run.bins < 2) throw ConfigError("bins must be >= 2", "bins", 0);
    if (!(out.run.target_acc_lo > 0 && out.run.target_acc_hi < 1 &&
          out.run.target_acc_lo < out.run.target_acc_hi))
      throw ConfigError("acceptance target must satisfy 0 < lo < hi < 1",
                        "target_acc_lo", 0);
  }
  out.warm_start = kv.get_bool("warm_start", true);
  out.workers = static_cast<int>(kv.get_int("workers", 1));
  if (out.workers < 1) throw ConfigError("workers must be >= 1", "workers", 0);
  out.init_snapshot = kv.get_string("init_snapshot", "");
  out.save_snapshot = kv.get_bool("save_snapshot", false);

  if (cmd == CliCommand::profile) {
    try {
      out.profile.kernel =
          phase_kernel_from_string(kv.get_string("profile_kernel", "coulomb"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what(), "profile_kernel", 0);
    }
    const int grid = static_cast<int>(kv.get_int("profile_grid", 32));
    if (grid < 2) throw ConfigError("profile_grid must be >= 2", "profile_grid", 0);
    out.profile.grid = {grid, grid, grid};
    out.profile.screening_mass = kv.get_real("profile_m", 1.0);
    out.profile.charge_q = kv.get_real("profile_q", 1.0);
    out.profile.rho1 = kv.get_real("profile_rho1", 1.0);
    out.profile.source_plus = {kv.get_real("profile_src_plus_x", 0.4),
                               kv.get_real("profile_src_plus_y", 0.0),
                               kv.get_real("profile_src_plus_z", 0.0)};
    out.profile.source_minus = {kv.get_real("profile_src_minus_x", -0.4),
                                kv.get_real("profile_src_minus_y", 0.0),
                                kv.get_real("profile_src_minus_z", 0.0)};
    out.profile_plane_frac = kv.get_real("profile_plane", 0.0);
  }

  kv.finish();
  return out;
}

namespace {

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string command_name(CliCommand cmd) {
  switch (cmd) {
    case CliCommand::scan: return "scan";
    case CliCommand::point: return "point";
    case CliCommand::profile: return "profile";
    case CliCommand::oracle: return "oracle";
  }
  return "?";
}

void write_keys(std::ostream& out, const RunConfig& c, CliCommand cmd,
                const std::string& prefix) {
  auto kv = [&](const std::string& k, const std::string& v) {
    out << prefix << k << " = " << v << "\n";
  };
  auto real = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  if (cmd == CliCommand::profile) {
    kv("profile_kernel", to_string(c.profile.kernel));
    kv("profile_grid", std::to_string(c.profile.grid[0]));
    kv("profile_m", real(c.profile.screening_mass));
    kv("profile_q", real(c.profile.charge_q));
    kv("profile_rho1", real(c.profile.rho1));
    kv("profile_src_plus_x", real(c.profile.source_plus[0]));
    kv("profile_src_plus_y", real(c.profile.source_plus[1]));
    kv("profile_src_plus_z", real(c.profile.source_plus[2]));
    kv("profile_src_minus_x", real(c.profile.source_minus[0]));
    kv("profile_src_minus_y", real(c.profile.source_minus[1]));
    kv("profile_src_minus_z", real(c.profile.source_minus[2]));
    kv("profile_plane", real(c.profile_plane_frac));
    return;
  }
  kv("model", to_string(c.model));
  kv("L", std::to_string(c.extent));
  kv("sector", sector_to_string(c.sector));
  if (cmd == CliCommand::scan) {
    kv("axis", to_string(c.axis));
    kv("lo", real(c.lo));
    kv("hi", real(c.hi));
    kv("dc", real(c.dc));
    kv("warm_start", c.warm_start ? "1" : "0");
    kv("workers", std::to_string(c.workers));
  }
  kv("c1", real(c.c1));
  kv("c2", real(c.c2));
  kv("c3", real(c.c3));
  kv("therm_sweeps", std::to_string(c.run.therm_sweeps));
  kv("meas_sweeps", std::to_string(c.run.meas_sweeps));
  kv("bins", std::to_string(c.run.bins));
  kv("start", to_string(c.run.start));
  kv("seed", std::to_string(c.run.seed));
  kv("target_acc_lo", real(c.run.target_acc_lo));
  kv("target_acc_hi", real(c.run.target_acc_hi));
  if (cmd == CliCommand::point && !c.init_snapshot.empty())
    kv("init_snapshot", c.init_snapshot);
  if (cmd == CliCommand::point)
    kv("save_snapshot", c.save_snapshot ? "1" : "0");
}

}  // namespace

void write_manifest_header(std::ostream& out, const RunConfig& cfg,
                           CliCommand cmd) {
  out << "# lgh " << version_string() << "\n";
  out << "# command = " << command_name(cmd) << "\n";
  out << "# generator = " << Rng::kGeneratorId << "\n";
  out << "# created = " << iso8601_now() << "\n";
  write_keys(out, cfg, cmd, "# ");
}

void write_manifest_config(std::ostream& out, const RunConfig& cfg,
                           CliCommand cmd) {
  out << "# re-runnable configuration (lgh " << version_string() << ", "
      << command_name(cmd) << ")\n";
  write_keys(out, cfg, cmd, "");
}

namespace {

void write_row(std::ostream& out, double c, const std::string& branch,
               const ScanPoint& pt) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.10g,%s,%.12g,%.6g,%.12g,%.6g,%.6g",
                c, branch.c_str(), pt.record.u_per_site, pt.record.u_err,
                pt.record.c_per_site, pt.record.c_err, pt.acceptance);
  out << buf << "\n";
}

}  // namespace

void write_scan_table(std::ostream& out, const ScanBranches& branches) {
  out << "c,branch,U/V,U_err,C/V,C_err,acceptance\n";
  for (const auto& pt : branches.up) write_row(out, pt.c, "up", pt);
  // the down branch was executed descending; emit it in run order
  for (auto it = branches.down.rbegin(); it != branches.down.rend(); ++it)
    write_row(out, it->c, "down", *it);
}

void write_point_row(std::ostream& out, double c, const ScanPoint& point,
                     const std::string& branch_label) {
  out << "c,branch,U/V,U_err,C/V,C_err,acceptance\n";
  write_row(out, c, branch_label, point);
}

void write_transition_report(std::ostream& out, const TransitionReport& r) {
  out << "order,low_confidence,c_lo,c_hi,max_branch_gap_sigma,"
         "hysteresis_loop_area,c_peak_height,u_jump_sigma,c_jump_sigma\n";
  char buf[320];
  std::snprintf(buf, sizeof(buf), "%s,%d,%.10g,%.10g,%.6g,%.6g,%.6g,%.6g,%.6g",
                to_string(r.order).c_str(), r.low_confidence ? 1 : 0, r.c_lo,
                r.c_hi, r.evidence.max_branch_gap_sigma,
                r.evidence.hysteresis_loop_area, r.evidence.c_peak_height,
                r.evidence.u_jump_sigma, r.evidence.c_jump_sigma);
  out << buf << "\n";
}

}  // namespace lgh

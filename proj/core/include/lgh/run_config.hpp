#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "lgh/profile.hpp"
#include "lgh/scan.hpp"

namespace lgh {

// Parse error carrying the offending key and 1-based line number.
struct ConfigError : std::runtime_error {
  ConfigError(const std::string& what, std::string key_, int line_)
      : std::runtime_error(what), key(std::move(key_)), line(line_) {}
  std::string key;
  int line = 0;
};

// Flat `key = value` text with '#' comments and blank lines. Every key must
// be consumed by a typed getter; unconsumed (unknown) keys are rejected by
// finish() with their line numbers.
class KeyValueConfig {
 public:
  static KeyValueConfig parse_file(const std::string& path);
  static KeyValueConfig parse_text(const std::string& text);

  std::string get_string(const std::string& key, const std::string& fallback);
  std::optional<std::string> get_required_string(const std::string& key);
  double get_real(const std::string& key, double fallback);
  std::int64_t get_int(const std::string& key, std::int64_t fallback);
  bool get_bool(const std::string& key, bool fallback);

  bool has(const std::string& key) const;
  void require(const std::string& key) const;  // throws if absent
  void finish() const;                         // rejects leftover keys

 private:
  struct Entry {
    std::string value;
    int line = 0;
    mutable bool consumed = false;
  };
  std::map<std::string, Entry> entries_;
};

enum class CliCommand { scan, point, profile, oracle };

// The validated, fully defaulted parameter set for one CLI invocation.
struct RunConfig {
  ModelPreset model = ModelPreset::IP;
  int extent = 8;
  Sector sector = Sector::unitary;
  ScanAxis axis = ScanAxis::c1;
  double lo = 0, hi = 0, dc = 1;
  double c1 = 0, c2 = 0, c3 = 0;
  RunParameters run;
  bool warm_start = true;
  int workers = 1;
  std::string init_snapshot;  // optional starting configuration (point)
  bool save_snapshot = false;

  ChargeProfileSpec profile;
  double profile_plane_frac = 0.0;  // x3 slice position, fraction of half-width
};

// Validates types, ranges and key set for the given subcommand. Throws
// ConfigError with key names and line numbers.
RunConfig parse_run_config(KeyValueConfig& kv, CliCommand cmd);

// The '#'-prefixed header embedded in every output file: version, generator
// identity, timestamp, command, and the full key set needed to re-run.
void write_manifest_header(std::ostream& out, const RunConfig& cfg,
                           CliCommand cmd);
// Same content as a loadable config file (no '#' prefixes on keys).
void write_manifest_config(std::ostream& out, const RunConfig& cfg,
                           CliCommand cmd);

// Stable scan/point table: c,branch,U/V,U_err,C/V,C_err,acceptance.
void write_scan_table(std::ostream& out, const ScanBranches& branches);
void write_point_row(std::ostream& out, double c, const ScanPoint& point,
                     const std::string& branch_label);
void write_transition_report(std::ostream& out, const TransitionReport& r);

std::string version_string();

}  // namespace lgh

#include <sstream>

#include "doctest.h"
#include "lgh/run_config.hpp"

using namespace lgh;

TEST_SUITE_BEGIN("config");

TEST_CASE("minimal scan config gets documented defaults") {
  KeyValueConfig kv = KeyValueConfig::parse_text(
      "model = IP\n"
      "L = 8\n"
      "axis = c1\n"
      "lo = 0.3\n"
      "hi = 0.4\n"
      "dc = 0.01\n"
      "c2 = 2.5   # fixed coupling\n");
  const RunConfig cfg = parse_run_config(kv, CliCommand::scan);
  CHECK(cfg.model == ModelPreset::IP);
  CHECK(cfg.extent == 8);
  CHECK(cfg.sector == Sector::unitary);
  CHECK(cfg.c2 == 2.5);
  CHECK(cfg.run.therm_sweeps == 3000);
  CHECK(cfg.run.meas_sweeps == 5000);
  CHECK(cfg.run.bins == 10);
  CHECK(cfg.run.seed == 12345);
  CHECK(cfg.run.start == StartKind::cold);
  CHECK(cfg.run.target_acc_lo == 0.6);
  CHECK(cfg.run.target_acc_hi == 0.8);
  CHECK(cfg.warm_start);
  CHECK(cfg.workers == 1);
}

TEST_CASE("unknown keys are rejected by name with the line number") {
  KeyValueConfig kv = KeyValueConfig::parse_text(
      "model = IP\nL = 8\nfoo = 1\n");
  try {
    parse_run_config(kv, CliCommand::point);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.key == "foo");
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("foo") != std::string::npos);
  }
}

TEST_CASE("dc = 0 fails validation") {
  KeyValueConfig kv = KeyValueConfig::parse_text(
      "model = IP\nL = 8\naxis = c1\nlo = 0.1\nhi = 0.2\ndc = 0\n");
  CHECK_THROWS_AS(parse_run_config(kv, CliCommand::scan), ConfigError);
}

TEST_CASE("type mismatches name the key and line") {
  KeyValueConfig kv = KeyValueConfig::parse_text(
      "model = IP\nL = eight\n");
  try {
    parse_run_config(kv, CliCommand::point);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.key == "L");
    CHECK(e.line == 2);
  }
}

TEST_CASE("missing required keys are reported") {
  KeyValueConfig kv = KeyValueConfig::parse_text("model = IP\nL = 8\n");
  CHECK_THROWS_AS(parse_run_config(kv, CliCommand::scan), ConfigError);
}

TEST_CASE("duplicate keys are rejected at parse time") {
  CHECK_THROWS_AS(KeyValueConfig::parse_text("a = 1\na = 2\n"), ConfigError);
}

TEST_CASE("malformed lines carry their line number") {
  try {
    KeyValueConfig::parse_text("model = IP\nnot a key value pair\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("booleans accept 0/1/true/false") {
  KeyValueConfig kv = KeyValueConfig::parse_text(
      "model = IP\nL = 4\nwarm_start = false\nsave_snapshot = 1\n");
  const RunConfig cfg = parse_run_config(kv, CliCommand::point);
  CHECK(!cfg.warm_start);
  CHECK(cfg.save_snapshot);
}

TEST_CASE("profile keys parse with defaults") {
  KeyValueConfig kv = KeyValueConfig::parse_text(
      "profile_kernel = higgs\nprofile_m = 2.0\nprofile_grid = 24\n");
  const RunConfig cfg = parse_run_config(kv, CliCommand::profile);
  CHECK(cfg.profile.kernel == PhaseKernel::higgs);
  CHECK(cfg.profile.screening_mass == 2.0);
  CHECK(cfg.profile.grid[0] == 24);
  CHECK(cfg.profile.source_plus[0] == 0.4);
  CHECK(cfg.profile.source_minus[0] == -0.4);
}

TEST_CASE("manifest config round-trips to an identical parameter set") {
  KeyValueConfig kv = KeyValueConfig::parse_text(
      "model = ItPLs\nL = 6\nsector = higgs\naxis = c1_equals_c3\n"
      "lo = 0.1\nhi = 0.3\ndc = 0.05\nc2 = 1.7\nseed = 777\n"
      "therm_sweeps = 123\nmeas_sweeps = 450\nbins = 5\nstart = hot\n");
  const RunConfig cfg = parse_run_config(kv, CliCommand::scan);
  std::ostringstream out;
  write_manifest_config(out, cfg, CliCommand::scan);
  KeyValueConfig kv2 = KeyValueConfig::parse_text(out.str());
  const RunConfig cfg2 = parse_run_config(kv2, CliCommand::scan);
  CHECK(cfg2.model == cfg.model);
  CHECK(cfg2.extent == cfg.extent);
  CHECK(cfg2.sector == cfg.sector);
  CHECK(cfg2.axis == cfg.axis);
  CHECK(cfg2.lo == cfg.lo);
  CHECK(cfg2.hi == cfg.hi);
  CHECK(cfg2.dc == cfg.dc);
  CHECK(cfg2.c2 == cfg.c2);
  CHECK(cfg2.run.seed == cfg.run.seed);
  CHECK(cfg2.run.therm_sweeps == cfg.run.therm_sweeps);
  CHECK(cfg2.run.meas_sweeps == cfg.run.meas_sweeps);
  CHECK(cfg2.run.bins == cfg.run.bins);
  CHECK(cfg2.run.start == cfg.run.start);
}

TEST_CASE("manifest header lines are all commented") {
  KeyValueConfig kv = KeyValueConfig::parse_text("model = PL\nL = 4\n");
  const RunConfig cfg = parse_run_config(kv, CliCommand::point);
  std::ostringstream out;
  write_manifest_header(out, cfg, CliCommand::point);
  std::istringstream in(out.str());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    CHECK(line.rfind('#', 0) == 0);
    ++lines;
  }
  CHECK(lines >= 10);
  CHECK(out.str().find("mt19937_64/u53") != std::string::npos);
}

TEST_SUITE_END();

// lgh: Monte Carlo driver for the anisotropic compact U(1) gauge-Higgs model.
//
// Subcommands:
//   scan    go-and-back coupling ramp, writes scan.csv + transition.csv
//   point   single run at fixed couplings, writes point.csv
//   profile static-charge density profile, writes profile_<kernel>.csv
//   oracle  self-check battery, writes oracle.csv, exits nonzero on failure

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lgh/oracles.hpp"
#include "lgh/run_config.hpp"

namespace fs = std::filesystem;
using namespace lgh;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir = ".";
  std::int64_t seed_override = -1;
  int workers_override = 0;
};

RunConfig load_config(const CommonArgs& args, CliCommand cmd) {
  KeyValueConfig kv = args.config_path.empty()
                          ? KeyValueConfig::parse_text("")
                          : KeyValueConfig::parse_file(args.config_path);
  RunConfig cfg = parse_run_config(kv, cmd);
  if (args.seed_override >= 0)
    cfg.run.seed = static_cast<std::uint64_t>(args.seed_override);
  if (args.workers_override > 0) cfg.workers = args.workers_override;
  return cfg;
}

std::ofstream open_out(const CommonArgs& args, const std::string& name) {
  fs::create_directories(args.out_dir);
  const fs::path p = fs::path(args.out_dir) / name;
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
  return out;
}

void write_manifest_file(const CommonArgs& args, const RunConfig& cfg,
                         CliCommand cmd) {
  auto out = open_out(args, "manifest.cfg");
  write_manifest_config(out, cfg, cmd);
}

ScanSchedule make_schedule(const RunConfig& cfg) {
  ScanSchedule s;
  s.axis = cfg.axis;
  s.base_c1 = cfg.c1;
  s.base_c2 = cfg.c2;
  s.base_c3 = cfg.c3;
  s.lo = cfg.lo;
  s.hi = cfg.hi;
  s.dc = cfg.dc;
  s.run = cfg.run;
  s.sector = cfg.sector;
  s.warm_start = cfg.warm_start;
  return s;
}

// Independent-point scans (warm_start = 0) can fan out to a bounded worker
// pool; per-point seeds come from the master seed and the point index, so
// results do not depend on the worker count.
ScanBranches run_scan_parallel(std::shared_ptr<const LatticeGeometry> geom,
                               const RunConfig& cfg, const ScanSchedule& s) {
  const std::vector<double> grid = scan_grid(s);
  const int n = static_cast<int>(grid.size());
  ScanBranches out;
  out.up.resize(n);
  out.down.resize(n);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int job = next.fetch_add(1);
      if (job >= 2 * n) return;
      const int branch = job / n;
      const int k = job % n;
      double c1 = s.base_c1, c2 = s.base_c2, c3 = s.base_c3;
      apply_axis(s.axis, grid[k], c1, c2, c3);
      RunParameters p = s.run;
      p.seed = derive_seed(s.run.seed, static_cast<std::uint64_t>(branch) + 1,
                           static_cast<std::uint64_t>(k));
      const RunPointResult r = run_point(
          geom, preset_couplings(cfg.model, c1, c2, c3), p, s.sector);
      ScanPoint& pt = branch == 0 ? out.up[k] : out.down[k];
      pt.c = grid[k];
      pt.record =
          estimate_uc(r.action_series, p.bins, geom->volume());
      pt.acceptance = r.meas_stats.acceptance_ratio();
    }
  };
  std::vector<std::thread> pool;
  const int nw = std::min(cfg.workers, 2 * n);
  pool.reserve(nw);
  for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

int cmd_scan(const CommonArgs& args) {
  const RunConfig cfg = load_config(args, CliCommand::scan);
  auto geom =
      std::make_shared<LatticeGeometry>(LatticeGeometry::cubic(cfg.extent));
  const ScanSchedule s = make_schedule(cfg);

  ScanBranches branches;
  if (!cfg.warm_start && cfg.workers > 1)
    branches = run_scan_parallel(geom, cfg, s);
  else
    branches = run_hysteresis_scan(geom, cfg.model, s);
  const TransitionReport report = classify_transition(branches);

  auto table = open_out(args, "scan.csv");
  write_manifest_header(table, cfg, CliCommand::scan);
  write_scan_table(table, branches);

  auto rep = open_out(args, "transition.csv");
  write_manifest_header(rep, cfg, CliCommand::scan);
  write_transition_report(rep, report);
  write_manifest_file(args, cfg, CliCommand::scan);

  std::cout << "scan: " << branches.up.size() << " points/branch, axis "
            << to_string(cfg.axis) << " in [" << cfg.lo << ", " << cfg.hi
            << "]\n";
  std::cout << "transition: order = " << to_string(report.order)
            << (report.low_confidence ? " (low confidence)" : "")
            << ", located in [" << report.c_lo << ", " << report.c_hi
            << "], max branch gap " << report.evidence.max_branch_gap_sigma
            << " sigma\n";
  return 0;
}

int cmd_point(const CommonArgs& args) {
  const RunConfig cfg = load_config(args, CliCommand::point);
  auto geom =
      std::make_shared<LatticeGeometry>(LatticeGeometry::cubic(cfg.extent));
  const Couplings cpl = preset_couplings(cfg.model, cfg.c1, cfg.c2, cfg.c3);

  RunPointResult r;
  if (!cfg.init_snapshot.empty()) {
    FieldConfiguration start = lgh::load_config(cfg.init_snapshot);
    if (start.g().extents() != geom->extents())
      throw std::runtime_error("init_snapshot extents do not match L");
    r = run_point(cpl, cfg.run, std::move(start));
  } else {
    r = run_point(geom, cpl, cfg.run, cfg.sector);
  }

  ScanPoint pt;
  double ax1 = cfg.c1, ax2 = cfg.c2, ax3 = cfg.c3;
  pt.c = cfg.axis == ScanAxis::c2 ? ax2
         : cfg.axis == ScanAxis::c3 ? ax3
                                    : ax1;
  pt.record = estimate_uc(r.action_series, cfg.run.bins, geom->volume());
  pt.acceptance = r.meas_stats.acceptance_ratio();

  auto table = open_out(args, "point.csv");
  write_manifest_header(table, cfg, CliCommand::point);
  write_point_row(table, pt.c, pt, "point");
  write_manifest_file(args, cfg, CliCommand::point);
  if (cfg.save_snapshot) {
    const fs::path p = fs::path(args.out_dir) / "final.snap";
    save_config(r.final_config, p.string());
  }

  std::cout << "point: U/V = " << pt.record.u_per_site << " +- "
            << pt.record.u_err << ", C/V = " << pt.record.c_per_site << " +- "
            << pt.record.c_err << ", acceptance = " << pt.acceptance << "\n";
  return 0;
}

int cmd_profile(const CommonArgs& args) {
  const RunConfig cfg = load_config(args, CliCommand::profile);
  const LinkField3D field = solve_static_field(cfg.profile);
  const SiteField3D rho = density_deviation(field);
  const int plane =
      map_fraction_to_site(cfg.profile_plane_frac, cfg.profile.grid[2]);

  const std::string name = "profile_" + to_string(cfg.profile.kernel) + ".csv";
  auto out = open_out(args, name);
  write_manifest_header(out, cfg, CliCommand::profile);
  export_contour_slice(rho, plane, out, &cfg.profile);
  write_manifest_file(args, cfg, CliCommand::profile);

  std::cout << "profile: kernel " << to_string(cfg.profile.kernel)
            << ", grid " << cfg.profile.grid[0] << "^3, slice x3 = " << plane
            << " -> " << name << "\n";
  return 0;
}

int cmd_oracle(const CommonArgs& args) {
  const RunConfig cfg = load_config(args, CliCommand::oracle);
  const auto checks = run_oracle_suite(cfg.run.seed);

  auto out = open_out(args, "oracle.csv");
  write_manifest_header(out, cfg, CliCommand::oracle);
  out << "check,status,value,threshold\n";
  bool all_pass = true;
  for (const auto& c : checks) {
    out << c.name << ',' << (c.pass ? "pass" : "FAIL") << ',' << c.value << ','
        << c.threshold << "\n";
    std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name << "  (value "
              << c.value << ", threshold " << c.threshold << ")\n";
    all_pass = all_pass && c.pass;
  }
  std::cout << (all_pass ? "oracle: all checks passed\n"
                         : "oracle: FAILURES detected\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo toolkit for the anisotropic U(1) gauge-Higgs model"};
  app.require_subcommand(1);

  CommonArgs args;
  auto add_common = [&](CLI::App* sub, bool config_required) {
    auto* opt = sub->add_option("--config", args.config_path,
                                "key=value configuration file");
    if (config_required) opt->required();
    sub->add_option("--out", args.out_dir, "output directory");
    sub->add_option("--seed", args.seed_override, "override the config seed");
    sub->add_option("--workers", args.workers_override,
                    "worker threads for independent-point scans");
  };

  auto* scan = app.add_subcommand("scan", "go-and-back coupling ramp");
  add_common(scan, true);
  auto* point = app.add_subcommand("point", "single run at fixed couplings");
  add_common(point, true);
  auto* profile = app.add_subcommand("profile", "static-charge density profile");
  add_common(profile, false);
  auto* oracle = app.add_subcommand("oracle", "run the self-check battery");
  add_common(oracle, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (scan->parsed()) return cmd_scan(args);
    if (point->parsed()) return cmd_point(args);
    if (profile->parsed()) return cmd_profile(args);
    if (oracle->parsed()) return cmd_oracle(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

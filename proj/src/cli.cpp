#include "hexmg/cli.hpp"

#include "hexmg/clustering.hpp"
#include "hexmg/converse.hpp"
#include "hexmg/emit.hpp"
#include "hexmg/regions.hpp"
#include "hexmg/verify.hpp"
#include "hexmg/zfverify.hpp"

#include <CLI11.hpp>

#include <climits>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hexmg {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key=value files: top-level keys are offered to the subcommand too,
// so a manifest can mix common flags with subcommand flags.
class FlatConfig : public CLI::ConfigINI {
 public:
  explicit FlatConfig(std::vector<std::string> subs) : subs_(std::move(subs)) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::vector<CLI::ConfigItem> out;
    for (const auto& item : CLI::ConfigINI::from_config(input)) {
      out.push_back(item);
      if (!item.parents.empty()) continue;
      for (const auto& s : subs_) {
        CLI::ConfigItem copy = item;
        copy.parents = {s};
        out.push_back(copy);
      }
    }
    return out;
  }

 private:
  std::vector<std::string> subs_;
};

struct Common {
  std::string out_dir;
  std::uint64_t seed = 42;
};

fs::path resolve(const Common& c, const std::string& file) {
  fs::path p(file);
  if (p.is_relative() && !c.out_dir.empty()) p = fs::path(c.out_dir) / p;
  return p;
}

void write_file(const fs::path& path, const std::string& body) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << body;
  if (!f) throw UsageError("cannot write " + path.string());
}

// Main output goes to stdout and, with --out, to a fixed file name in that directory.
void deliver(const Common& c, std::ostream& out, const std::string& name, const std::string& body) {
  out << body;
  if (!c.out_dir.empty()) write_file(fs::path(c.out_dir) / name, body);
}

Rational parse_prelog(const std::string& flag, const std::string& text) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
  if (r < 0) throw UsageError(flag + " must be non-negative");
  return r;
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void fraction_csv(std::ostream& os, const std::vector<FractionStat>& stats) {
  for (const auto& s : stats)
    os << s.name << ',' << s.count << ',' << fixed6(s.fraction()) << ',' << to_decimal(s.limit) << ','
       << fixed6(s.abs_error()) << '\n';
}

int cmd_lattice(const Common& c, int radius, int M, const std::string& emit, std::ostream& out) {
  Network net = build_network(radius, M);
  std::ostringstream csv;
  write_lattice_csv(csv, net);
  if (emit.empty()) {
    deliver(c, out, "lattice.csv", csv.str());
    return 0;
  }
  write_file(resolve(c, emit), csv.str());
  long long interior = 0, regular = 0;
  for (const auto& s : net.sectors())
    if (net.interior(s)) {
      ++interior;
      regular += net.tx_neighbors(s).size() == 4 ? 1 : 0;
    }
  out << "lattice radius=" << radius << " M=" << M << " cells=" << net.cells().size()
      << " sectors=" << net.sectors().size() << " edges=" << interference_graph(net).size()
      << " interior_sectors=" << interior << " interior_degree4=" << regular << "\n";
  return 0;
}

int cmd_cluster(const Common& c, int radius, int t, const std::string& mode, bool check_counts,
                const std::string& emit, std::ostream& out) {
  Network net = build_network(radius, 1);
  ClusterPlan plan = assign_messages(clusters(net, t), mode == "mixed" ? AssignMode::MIXED : AssignMode::SLOW_ONLY);
  int interior = 0;
  for (const auto& cl : plan.clusters) interior += cl.interior ? 1 : 0;
  std::ostringstream os;
  os << "cluster radius=" << radius << " t=" << t << " mode=" << mode << " masters=" << plan.masters.size()
     << " clusters=" << plan.clusters.size() << " interior_clusters=" << interior
     << " silenced=" << plan.silenced.size() << "\n";
  os << "role,count,fraction,limit,abs_error\n";
  fraction_csv(os, role_fractions(plan));
  int rc = 0;
  if (check_counts) {
    long long T = t;
    for (auto side : {LinkSide::TX, LinkSide::RX}) {
      long long want = side == LinkSide::TX ? 36 * T * T : 18 * T * T;
      auto counts = count_links(plan, side);
      bool ok = std::all_of(counts.begin(), counts.end(), [&](const ClusterLinkCount& x) { return x.links == want; });
      os << (side == LinkSide::TX ? "tx" : "rx") << "_links_per_interior_cluster=" << counts.front().links
         << " expected=" << want << " clusters=" << counts.size() << (ok ? " OK" : " MISMATCH") << "\n";
      if (!ok) rc = 1;
    }
  }
  deliver(c, out, "cluster_summary.txt", os.str());
  if (!emit.empty()) {
    std::ostringstream csv;
    write_cluster_csv(csv, plan);
    write_file(resolve(c, emit), csv.str());
  }
  return rc;
}

int cmd_region(const Common& c, int M, const std::string& mu_tx, const std::string& mu_rx, int D, bool inner,
               bool outer, const std::string& format, int samples, int t, std::ostream& out) {
  SystemParams p{M, parse_prelog("--mu-tx", mu_tx), parse_prelog("--mu-rx", mu_rx), D};
  if (!inner && !outer) inner = outer = true;
  std::optional<TRange> ts;
  if (t > 0) ts = TRange{t, t};
  std::vector<NamedCurve> curves;
  auto add = [&](const std::string& name, const Region& r) {
    curves.push_back({name, samples > 0 ? boundary_samples(r, samples) : r.vertices});
  };
  if (inner) add("inner", inner_bound(p, ts));
  if (outer) add("outer", outer_bound(p));
  std::ostringstream os;
  if (format == "json")
    write_region_json(os, curves);
  else if (format == "svg")
    write_region_svg(os, curves);
  else
    write_region_csv(os, curves);
  deliver(c, out, "region." + format, os.str());
  return 0;
}

int cmd_zf(const Common& c, int t, int M, int trials, double tol, const std::string& scheme, std::ostream& out) {
  ZfScheme s = scheme == "s3" ? ZfScheme::S3 : scheme == "s5" ? ZfScheme::S5 : ZfScheme::S4;
  auto res = run_zf_trials(t, M, s, trials, c.seed, tol);
  int good = 0, min_rank = M;
  double worst = 0.0;
  for (const auto& r : res) {
    good += r.report.solvable ? 1 : 0;
    min_rank = std::min(min_rank, r.report.min_self_rank);
    if (!r.rank_deficient) worst = std::max(worst, r.report.max_cross_residual);
  }
  bool pass = good == trials;
  std::ostringstream os;
  os << "zf scheme=" << scheme << " t=" << t << " M=" << M << " trials=" << trials << " seed=" << c.seed
     << " tol=" << format_sci(tol, 1) << ": " << good << "/" << trials << " solvable, max residual "
     << format_sci(worst) << ", min self rank " << min_rank << " -> " << (pass ? "PASS" : "FAIL") << "\n";
  write_zf_csv(os, res);
  deliver(c, out, "zf.csv", os.str());
  return pass ? 0 : 1;
}

int cmd_converse(const Common& c, int D, int radius, bool check, std::ostream& out) {
  Network net = build_network(radius, 1);
  auto stats = partition_fractions(partition_two(net));
  auto four = partition_fractions(partition_four(net, D));
  stats.insert(stats.end(), four.begin(), four.end());
  std::ostringstream os;
  int rc = 0;
  if (check) {
    double worst = 0.0;
    for (const auto& s : stats) worst = std::max(worst, s.abs_error());
    rc = worst <= 0.02 ? 0 : 1;
    os << "converse D=" << D << " radius=" << radius << ": interior fractions, max abs error " << fixed6(worst)
       << " (tolerance 0.02) -> " << (rc == 0 ? "PASS" : "FAIL") << "\n";
  }
  os << "color,count,fraction,limit,abs_error\n";
  fraction_csv(os, stats);
  deliver(c, out, "converse.csv", os.str());
  return rc;
}

int cmd_schedule(const Common& c, int algorithm, int dt, int dr, int D, bool validate, std::ostream& out) {
  if (D < 0) D = dt + dr;
  SchedulePlan plan;
  if (algorithm == 1) {
    plan = schedule_algorithm1(partition_two(build_network(2, 1)), dt, dr, D);
  } else {
    plan = schedule_algorithm2(partition_four(build_network(3 * D, 1), D), dt, dr);
  }
  std::ostringstream os;
  write_schedule_table(os, plan);
  auto rep = validate_schedule(plan);
  os << "verdict: " << (rep.ok ? "VALID" : "INVALID") << " algorithm=" << algorithm << " D_t=" << dt
     << " D_r=" << dr << " D=" << plan.D << " steps=" << plan.steps.size() << "\n";
  for (const auto& v : rep.violations)
    os << "violation (" << v.rule << ")" << (v.step >= 0 ? " step " + std::to_string(v.step) : std::string())
       << ": " << v.detail << "\n";
  deliver(c, out, "schedule.csv", os.str());
  return validate && !rep.ok ? 1 : 0;
}

int cmd_verify_all(const Common& c, int radius, int trials, std::ostream& out) {
  VerifyOptions opt{radius, c.seed, trials};
  auto lines = verify_all(opt);
  deliver(c, out, "verify_all.txt", format_report(opt, lines));
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; }) ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sectorized hexagonal network toolkit", "hexmg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value file; flags on the command line win");
  app.allow_config_extras(CLI::config_extras_mode::ignore);

  Common common;
  app.add_option("--out", common.out_dir, "directory for emitted files");
  app.add_option("--seed", common.seed, "global seed");

  const auto pos = CLI::Range(1, INT_MAX);
  const auto nonneg = CLI::Range(0, INT_MAX);

  int radius = 0, M = 1, t = 0, D = -1, samples = 0, trials = 100, algorithm = 1, dt = 0, dr = 0;
  std::string emit, mode = "slow", mu_tx, mu_rx, format = "csv", scheme = "s4";
  bool check_counts = false, inner = false, outer = false, both = false, check_fractions = false, validate = false;
  double tol = 1e-9;

  auto* lattice = app.add_subcommand("lattice", "interference topology");
  lattice->add_option("--radius", radius)->required()->check(pos);
  lattice->add_option("--m", M)->check(pos);
  lattice->add_option("--emit", emit, "CSV of directed interference edges");

  auto* cluster = app.add_subcommand("cluster", "master grid, silencing and fast/slow assignment");
  cluster->add_option("--radius", radius)->required()->check(pos);
  cluster->add_option("--t", t)->required()->check(pos);
  cluster->add_option("--mode", mode)->check(CLI::IsMember({"slow", "mixed"}));
  cluster->add_flag("--check-counts", check_counts);
  cluster->add_option("--emit", emit, "CSV of sector roles");

  auto* region = app.add_subcommand("region", "inner and outer multiplexing-gain regions");
  region->add_option("--m", M)->required()->check(pos);
  region->add_option("--mu-tx", mu_tx)->required();
  region->add_option("--mu-rx", mu_rx)->required();
  region->add_option("--d", D)->required()->check(pos);
  auto* f_inner = region->add_flag("--inner", inner);
  auto* f_outer = region->add_flag("--outer", outer);
  auto* f_both = region->add_flag("--both", both);
  f_inner->excludes(f_outer)->excludes(f_both);
  f_outer->excludes(f_both);
  region->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "svg"}));
  region->add_option("--samples", samples, "boundary points instead of vertices")->check(CLI::Range(2, INT_MAX));
  region->add_option("--t", t, "restrict scheme points to this t")->check(pos);

  auto* zf = app.add_subcommand("zf", "zero-forcing certification");
  zf->add_option("--t", t)->required()->check(pos);
  zf->add_option("--m", M)->required()->check(pos);
  zf->add_option("--trials", trials)->check(nonneg);
  zf->add_option("--tol", tol)->check(CLI::PositiveNumber);
  zf->add_option("--scheme", scheme)->check(CLI::IsMember({"s3", "s4", "s5"}));

  auto* converse = app.add_subcommand("converse", "partition census");
  converse->add_option("--d", D)->required()->check(CLI::Range(2, INT_MAX));
  converse->add_option("--radius", radius)->required()->check(pos);
  converse->add_flag("--check-fractions", check_fractions);

  auto* schedule = app.add_subcommand("schedule", "converse decoding schedules");
  schedule->add_option("--algorithm", algorithm)->required()->check(CLI::IsMember({1, 2}));
  schedule->add_option("--dt", dt)->required()->check(nonneg);
  schedule->add_option("--dr", dr)->required()->check(nonneg);
  schedule->add_option("--d", D)->check(pos);
  schedule->add_flag("--validate", validate);

  auto* verify = app.add_subcommand("verify-all", "run every acceptance check");
  int vradius = 30;
  verify->add_option("--radius", vradius)->check(pos);
  verify->add_option("--trials", trials, "zero-forcing trials per configuration")->check(pos);

  // Config keys only reach the subcommand named on the command line.
  std::vector<std::string> active;
  for (auto* s : app.get_subcommands({})) {
    s->configurable();
    s->allow_config_extras(CLI::config_extras_mode::ignore);
    for (int i = 1; i < argc && active.empty(); ++i)
      if (s->get_name() == argv[i]) active.push_back(s->get_name());
  }
  app.config_formatter(std::make_shared<FlatConfig>(active));

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (lattice->parsed()) return cmd_lattice(common, radius, M, emit, out);
    if (cluster->parsed()) return cmd_cluster(common, radius, t, mode, check_counts, emit, out);
    if (region->parsed()) return cmd_region(common, M, mu_tx, mu_rx, D, inner, outer, format, samples, t, out);
    if (zf->parsed()) return cmd_zf(common, t, M, trials, tol, scheme, out);
    if (converse->parsed()) return cmd_converse(common, D, radius, check_fractions, out);
    if (schedule->parsed()) {
      if (algorithm == 2 && (D < 0 ? dt + dr : D) < 2) throw UsageError("algorithm 2 needs D >= 2");
      return cmd_schedule(common, algorithm, dt, dr, D, validate, out);
    }
    if (verify->parsed()) return cmd_verify_all(common, vradius, trials, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hexmg

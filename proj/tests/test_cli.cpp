#include "doctest.h"

#include "hexmg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hexmg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = hexmg::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("hexmg_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("region csv reproduces the reference intercepts") {
  Result r = run({"region", "--m", "3", "--mu-tx", "0.1", "--mu-rx", "0.2", "--d", "20", "--both", "--format", "csv",
                  "--t", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("bound,sf,ss\n", 0) == 0);
  CHECK(has_line(r.out, "inner,0.000000,1.553571"));
  CHECK(has_line(r.out, "inner,1.479221,0.072727"));
  CHECK(has_line(r.out, "inner,1.500000,0.000000"));
  CHECK(has_line(r.out, "outer,0.000000,1.766667"));
  CHECK(has_line(r.out, "outer,1.500000,0.266667"));
}

TEST_CASE("region json carries exact fractions") {
  Result r = run({"region", "--m", "3", "--mu-tx", "1/10", "--mu-rx", "1/5", "--d", "20", "--outer", "--format", "json"});
  REQUIRE(r.code == 0);
  std::string flat;
  for (char c : r.out)
    if (!std::isspace(static_cast<unsigned char>(c))) flat += c;
  CHECK(flat.find("\"ss\":[\"53\",\"30\"]") != std::string::npos);
  CHECK(r.out.find("\"inner\"") == std::string::npos);
}

TEST_CASE("region svg is labelled and byte-stable") {
  std::vector<std::string> args{"region", "--m", "3", "--mu-tx", "10", "--mu-rx", "10", "--d", "20", "--format", "svg"};
  Result a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("<svg") != std::string::npos);
  CHECK(a.out.find("S^(F)") != std::string::npos);
  CHECK(a.out.find("S^(S)") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"region", "--m", "0", "--mu-tx", "0.1", "--mu-rx", "0.2", "--d", "20"}).code == 2);
  CHECK(run({"region", "--m", "3", "--mu-tx", "-1", "--mu-rx", "0.2", "--d", "20"}).code == 2);
  CHECK(run({"region", "--m", "3", "--mu-tx", "x", "--mu-rx", "0.2", "--d", "20"}).code == 2);
  CHECK(run({"region", "--m", "3", "--mu-tx", "0", "--mu-rx", "0", "--d", "20", "--inner", "--outer"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"cluster", "--radius", "5", "--t", "2"}).code == 2);
  CHECK(run({"converse", "--d", "1", "--radius", "10"}).code == 2);
  CHECK(run({"zf", "--t", "1", "--m", "1", "--scheme", "s9"}).code == 2);
  CHECK(run({"lattice", "--radius", "2", "--config", "/nonexistent/hexmg.cfg"}).code == 2);
}

TEST_CASE("lattice csv is sorted with one row per directed edge") {
  Result r = run({"lattice", "--radius", "1", "--m", "1"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "sector_cell_q,sector_cell_r,orientation,neighbor_cell_q,neighbor_cell_r,neighbor_orientation");
  std::vector<std::vector<int>> rows;
  for (std::string l; std::getline(in, l);) {
    std::vector<int> row;
    std::istringstream ls(l);
    for (std::string f; std::getline(ls, f, ',');) row.push_back(std::stoi(f));
    rows.push_back(row);
  }
  CHECK(std::is_sorted(rows.begin(), rows.end()));
  CHECK(rows.size() == 48);
}

TEST_CASE("cluster counts check and emitted roles") {
  fs::path dir = scratch("cluster");
  Result r = run({"--out", dir.string(), "cluster", "--radius", "12", "--t", "2", "--mode", "mixed", "--check-counts",
                  "--emit", "roles.csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("tx_links_per_interior_cluster=144") != std::string::npos);
  std::string csv = slurp(dir / "roles.csv");
  CHECK(csv.rfind("cell_q,cell_r,orientation,role,cluster_id\n", 0) == 0);
  CHECK(csv.find(",MASTER,") != std::string::npos);
  CHECK(csv.find(",FAST,") != std::string::npos);
  CHECK(csv.find(",SILENT,-1") != std::string::npos);
  CHECK(fs::exists(dir / "cluster_summary.txt"));
  fs::remove_all(dir);
}

TEST_CASE("zf prints a verdict and the trial table") {
  Result r = run({"zf", "--t", "1", "--m", "2", "--trials", "5", "--seed", "3", "--tol", "1e-9"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("trial,solvable,max_cross_residual,min_self_rank\n") != std::string::npos);
  CHECK(run({"zf", "--t", "1", "--m", "2", "--trials", "5", "--seed", "3"}).out == r.out);
}

TEST_CASE("converse census csv") {
  Result r = run({"converse", "--d", "3", "--radius", "40", "--check-fractions"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("color,count,fraction,limit,abs_error\n") != std::string::npos);
  CHECK(r.out.find("four.PINK,") != std::string::npos);
}

TEST_CASE("schedule validation drives the exit code") {
  CHECK(run({"schedule", "--algorithm", "1", "--dt", "10", "--dr", "10", "--d", "20", "--validate"}).code == 0);
  CHECK(run({"schedule", "--algorithm", "2", "--dt", "1", "--dr", "2", "--d", "3", "--validate"}).code == 0);
  Result bad = run({"schedule", "--algorithm", "1", "--dt", "10", "--dr", "11", "--d", "20", "--validate"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("violation (d)") != std::string::npos);
  CHECK(run({"schedule", "--algorithm", "3", "--dt", "1", "--dr", "1", "--d", "3"}).code == 2);
}

TEST_CASE("config file supplies flags and the command line wins") {
  fs::path dir = scratch("config");
  {
    std::ofstream cfg(dir / "run.cfg");
    cfg << "m = 3\nmu-tx = 0.1\nmu-rx = 0.2\nd = 20\nt = 4\nformat = csv\n";
  }
  Result a = run({"region", "--config", (dir / "run.cfg").string()});
  REQUIRE(a.code == 0);
  CHECK(has_line(a.out, "inner,1.479221,0.072727"));
  Result b = run({"region", "--config", (dir / "run.cfg").string(), "--mu-rx", "0"});
  REQUIRE(b.code == 0);
  CHECK(b.out != a.out);
  CHECK(has_line(b.out, "outer,0.000000,1.633333"));
  fs::remove_all(dir);
}

TEST_CASE("out directory receives the main output and unwritable paths fail") {
  fs::path dir = scratch("out");
  Result r = run({"--out", dir.string(), "schedule", "--algorithm", "1", "--dt", "1", "--dr", "1", "--d", "3"});
  REQUIRE(r.code == 0);
  CHECK(slurp(dir / "schedule.csv") == r.out);
  {
    std::ofstream blocker(dir / "file");
  }
  CHECK(run({"--out", (dir / "file" / "sub").string(), "lattice", "--radius", "1"}).code == 2);
  fs::remove_all(dir);
}

#include "hexmg/clustering.hpp"
#include "hexmg/converse.hpp"
#include "hexmg/regions.hpp"
#include "hexmg/verify.hpp"
#include "hexmg/zfverify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <tuple>

namespace py = pybind11;
using namespace hexmg;

namespace {

using Cell = std::tuple<int, int>;
using Sector = std::tuple<int, int, int>;

Cell cell_out(CellCoord c) { return {c.q, c.r}; }
Sector sector_out(const SectorId& s) { return {s.cell.q, s.cell.r, s.orientation}; }
SectorId sector_in(const Sector& s) { return {{std::get<0>(s), std::get<1>(s)}, std::get<2>(s)}; }

// Rationals cross the boundary as "num/den" strings; the Python layer wraps them in Fraction.
std::string frac(const Rational& r) { return to_fraction_string(r); }

std::vector<std::tuple<std::string, std::string>> vertices_out(const Region& r) {
  std::vector<std::tuple<std::string, std::string>> out;
  for (const auto& p : r.vertices) out.emplace_back(frac(p.sf), frac(p.ss));
  return out;
}

SystemParams params(int M, const std::string& mu_tx, const std::string& mu_rx, int D) {
  return {M, parse_rational(mu_tx), parse_rational(mu_rx), D};
}

Scheme scheme_in(const std::string& s) {
  if (s == "S1") return Scheme::S1;
  if (s == "S2") return Scheme::S2;
  if (s == "S3") return Scheme::S3;
  if (s == "S4") return Scheme::S4;
  if (s == "S5") return Scheme::S5;
  throw py::value_error("unknown scheme " + s);
}

PointScheme point_scheme_in(const std::string& s) {
  if (s == "S1") return PointScheme::S1;
  if (s == "S2_3_SLOW") return PointScheme::S2_3_SLOW;
  if (s == "S4_5_MIXED") return PointScheme::S4_5_MIXED;
  throw py::value_error("unknown scheme " + s);
}

ZfScheme zf_scheme_in(const std::string& s) {
  if (s == "s3") return ZfScheme::S3;
  if (s == "s4") return ZfScheme::S4;
  if (s == "s5") return ZfScheme::S5;
  throw py::value_error("unknown scheme " + s);
}

LinkSide side_in(const std::string& s) {
  if (s == "TX") return LinkSide::TX;
  if (s == "RX") return LinkSide::RX;
  throw py::value_error("side must be TX or RX");
}

}  // namespace

PYBIND11_MODULE(_hexmg, m) {
  m.doc() = "Sectorized hexagonal network toolkit (compiled core)";

  py::register_exception<RankDeficientError>(m, "RankDeficientError");

  py::class_<Network>(m, "Network")
      .def_property_readonly("radius", &Network::radius)
      .def_property_readonly("antennas", &Network::antennas)
      .def("cells", [](const Network& n) {
        std::vector<Cell> out;
        for (const auto& c : n.cells()) out.push_back(cell_out(c));
        return out;
      })
      .def("sectors", [](const Network& n) {
        std::vector<Sector> out;
        for (const auto& s : n.sectors()) out.push_back(sector_out(s));
        return out;
      })
      .def("tx_neighbors", [](const Network& n, const Sector& s) {
        std::vector<Sector> out;
        for (const auto& x : n.tx_neighbors(sector_in(s))) out.push_back(sector_out(x));
        return out;
      })
      .def("rx_neighbors", [](const Network& n, const Cell& c) {
        std::vector<Cell> out;
        for (const auto& x : n.rx_neighbors({std::get<0>(c), std::get<1>(c)})) out.push_back(cell_out(x));
        return out;
      })
      .def("depth", [](const Network& n, const Cell& c) { return n.depth({std::get<0>(c), std::get<1>(c)}); });

  m.def("build_network", &build_network, py::arg("radius"), py::arg("M") = 1);
  m.def("cell_distance", [](const Cell& a, const Cell& b) {
    return cell_distance({std::get<0>(a), std::get<1>(a)}, {std::get<0>(b), std::get<1>(b)});
  });
  m.def("interference_graph", [](const Network& n) {
    std::vector<std::tuple<Sector, Sector>> out;
    for (const auto& [a, b] : interference_graph(n)) out.emplace_back(sector_out(a), sector_out(b));
    return out;
  });

  py::class_<ClusterPlan>(m, "ClusterPlan")
      .def_readonly("t", &ClusterPlan::t)
      .def_property_readonly("masters", [](const ClusterPlan& p) {
        std::vector<Cell> out;
        for (const auto& c : p.masters) out.push_back(cell_out(c));
        return out;
      })
      .def_property_readonly("silenced", [](const ClusterPlan& p) {
        std::vector<Sector> out;
        for (const auto& s : p.silenced) out.push_back(sector_out(s));
        return out;
      })
      .def_property_readonly("cluster_count", [](const ClusterPlan& p) { return p.clusters.size(); })
      .def("role", [](const ClusterPlan& p, const Sector& s) { return to_string(p.role(sector_in(s))); })
      .def("census", [](const ClusterPlan& p, int min_depth) {
        RoleCensus c = role_census(p, min_depth);
        return py::dict(py::arg("sectors") = c.sectors, py::arg("SILENT") = c.silent, py::arg("SLOW") = c.slow,
                        py::arg("FAST") = c.fast);
      }, py::arg("min_depth") = 2)
      .def("link_counts", [](const ClusterPlan& p, const std::string& side) {
        std::vector<long long> out;
        for (const auto& c : count_links(p, side_in(side))) out.push_back(c.links);
        return out;
      })
      .def("message_count", [](const ClusterPlan& p, const std::string& scheme, int M, const std::string& side) {
        return conferencing_message_count(p, scheme_in(scheme), M, side_in(side));
      });

  m.def("cluster_plan", [](const Network& n, int t, const std::string& mode) {
    ClusterPlan plan = clusters(n, t);
    if (mode == "slow") return assign_messages(std::move(plan), AssignMode::SLOW_ONLY);
    if (mode == "mixed") return assign_messages(std::move(plan), AssignMode::MIXED);
    throw py::value_error("mode must be 'slow' or 'mixed'");
  }, py::arg("net"), py::arg("t"), py::arg("mode") = "slow");

  m.def("required_prelogs", [](const std::string& scheme, int t, int M) {
    auto p = required_prelogs(scheme_in(scheme), t, M);
    return std::make_tuple(frac(p.mu_tx), frac(p.mu_rx));
  });

  m.def("scheme_point", [](const std::string& scheme, int t, int M, const std::string& mu_tx, const std::string& mu_rx,
                           int D) {
    MGPoint p = scheme_point(point_scheme_in(scheme), t, params(M, mu_tx, mu_rx, D));
    return std::make_tuple(frac(p.sf), frac(p.ss));
  });
  m.def("inner_bound", [](int M, const std::string& mu_tx, const std::string& mu_rx, int D, std::optional<int> t) {
    std::optional<TRange> ts;
    if (t) ts = TRange{*t, *t};
    return vertices_out(inner_bound(params(M, mu_tx, mu_rx, D), ts));
  }, py::arg("M"), py::arg("mu_tx"), py::arg("mu_rx"), py::arg("D"), py::arg("t") = py::none());
  m.def("outer_bound", [](int M, const std::string& mu_tx, const std::string& mu_rx, int D) {
    return vertices_out(outer_bound(params(M, mu_tx, mu_rx, D)));
  });

  m.def("run_zf_trials", [](int t, int M, const std::string& scheme, int trials, std::uint64_t seed, double tol) {
    py::list out;
    for (const auto& tr : run_zf_trials(t, M, zf_scheme_in(scheme), trials, seed, tol))
      out.append(py::dict(py::arg("trial") = tr.trial, py::arg("seed") = tr.seed,
                          py::arg("solvable") = tr.report.solvable,
                          py::arg("max_cross_residual") = tr.report.max_cross_residual,
                          py::arg("min_self_rank") = tr.report.min_self_rank,
                          py::arg("rank_deficient") = tr.rank_deficient));
    return out;
  }, py::arg("t"), py::arg("M"), py::arg("scheme") = "s4", py::arg("trials") = 10, py::arg("seed") = 42,
     py::arg("tol") = 1e-9);

  m.def("partition_census", [](const std::string& kind, int radius, int D) {
    Network net = build_network(radius, 1);
    Partition p = kind == "two" ? partition_two(net) : partition_four(net, D);
    py::dict out;
    for (Color c : colors_of(p.kind)) out[py::str(to_string(c))] = p.count(c);
    return out;
  }, py::arg("kind"), py::arg("radius"), py::arg("D") = 3);

  m.def("validate_schedule", [](int algorithm, int dt, int dr, int D) {
    SchedulePlan plan = algorithm == 1 ? schedule_algorithm1(partition_two(build_network(2, 1)), dt, dr, D)
                                       : schedule_algorithm2(partition_four(build_network(3 * D, 1), D), dt, dr);
    auto rep = validate_schedule(plan);
    std::vector<std::string> v;
    for (const auto& x : rep.violations) v.push_back(std::string(1, x.rule) + ": " + x.detail);
    return py::dict(py::arg("ok") = rep.ok, py::arg("steps") = plan.steps.size(), py::arg("violations") = v);
  });

  m.def("verify_all", [](int radius, std::uint64_t seed, int trials) {
    VerifyOptions opt{radius, seed, trials};
    return format_report(opt, verify_all(opt));
  }, py::arg("radius") = 30, py::arg("seed") = 42, py::arg("trials") = 100);
}

#include "hexmg/verify.hpp"

#include "hexmg/emit.hpp"
#include "hexmg/regions.hpp"
#include "hexmg/zfverify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hexmg {

double FractionStat::abs_error() const { return std::fabs(fraction() - to_double(limit)); }

std::vector<FractionStat> role_fractions(const ClusterPlan& plan) {
  RoleCensus c = role_census(plan, 2);
  Rational t(plan.t);
  std::string tag = "t=" + std::to_string(plan.t);
  std::vector<FractionStat> out{{"SILENT " + tag, c.silent, c.sectors, 1 / (3 * t)}};
  if (plan.mode == AssignMode::MIXED) {
    out.push_back({"FAST " + tag, c.fast, c.sectors, Rational(1, 3)});
    out.push_back({"SLOW " + tag, c.slow, c.sectors, (2 * t - 1) / (3 * t)});
  } else if (plan.mode == AssignMode::SLOW_ONLY) {
    out.push_back({"SLOW " + tag, c.slow, c.sectors, (3 * t - 1) / (3 * t)});
  }
  return out;
}

std::vector<FractionStat> partition_fractions(const Partition& p) {
  std::map<Color, long long> counts;
  long long total = 0;
  for (const auto& [c, col] : p.coloring) {
    if (p.net.depth(c) < 2) continue;
    ++counts[col];
    ++total;
  }
  std::string prefix = p.kind == PartitionKind::TWO_COLOR ? "two." : "four.";
  std::vector<FractionStat> out;
  for (Color col : colors_of(p.kind))
    out.push_back({prefix + to_string(col), counts[col], total, limit_fraction(p.kind, p.D, col)});
  return out;
}

namespace {

std::string fmt(double x, int places = 5) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(places);
  os << x;
  return os.str();
}

// Fraction statistics whose limits are asserted, at one lattice radius.
std::vector<FractionStat> fraction_suite(int radius) {
  std::vector<FractionStat> out;
  Network net = build_network(radius, 1);
  for (int t : {1, 2}) {
    auto s = role_fractions(assign_messages(clusters(net, t), AssignMode::SLOW_ONLY));
    out.insert(out.end(), s.begin(), s.end());
  }
  {
    auto s = role_fractions(assign_messages(clusters(net, 4), AssignMode::MIXED));
    for (auto& f : s) f.name = "mixed " + f.name;
    out.insert(out.end(), s.begin(), s.end());
  }
  auto two = partition_fractions(partition_two(net));
  out.insert(out.end(), two.begin(), two.end());
  auto four = partition_fractions(partition_four(net, 3));
  out.insert(out.end(), four.begin(), four.end());
  return out;
}

CheckLine check_lattice(int radius) {
  Network net = build_network(radius, 1);
  long long degree_sum = 0, bad = 0;
  for (const auto& k : net.sectors()) {
    const auto& nb = net.tx_neighbors(k);
    degree_sum += static_cast<long long>(nb.size());
    for (const auto& l : nb) {
      if (l.cell == k.cell) ++bad;
      const auto& back = net.tx_neighbors(l);
      if (!std::binary_search(back.begin(), back.end(), k)) ++bad;
    }
    if (net.depth(k.cell) >= 2) {
      if (nb.size() != 4) ++bad;
      const auto& ref = net.tx_neighbors({{0, 0}, k.orientation});
      for (std::size_t i = 0; i < nb.size() && i < ref.size(); ++i)
        if (nb[i].cell - k.cell != ref[i].cell || nb[i].orientation != ref[i].orientation) ++bad;
    }
  }
  auto edges = interference_graph(net);
  if (2 * static_cast<long long>(edges.size()) != degree_sum) ++bad;
  std::ostringstream d;
  d << "radius " << radius << ": " << net.cells().size() << " cells, " << net.sectors().size() << " sectors, "
    << edges.size() << " edges; interior degree 4, symmetric, translation invariant, no intra-cell edges";
  return {"lattice", bad == 0, d.str()};
}

bool has_vertex(const Region& r, const std::string& sf, const std::string& ss) {
  return std::any_of(r.vertices.begin(), r.vertices.end(),
                     [&](const MGPoint& p) { return to_decimal(p.sf, 4) == sf && to_decimal(p.ss, 4) == ss; });
}

CheckLine check_reference_region() {
  SystemParams large{3, 10, 10, 20};
  SystemParams small{3, Rational(1, 10), Rational(1, 5), 20};
  TRange t4{4, 4};
  Region ol = outer_bound(large), os = outer_bound(small);
  Region il = inner_bound(large, t4), is = inner_bound(small, t4);
  bool ok = has_vertex(ol, "0.0000", "2.9964") && has_vertex(ol, "1.5000", "1.4964") &&
            has_vertex(os, "0.0000", "1.7667") && has_vertex(os, "1.5000", "0.2667") &&
            has_vertex(il, "0.0000", "2.7500") && has_vertex(il, "1.0000", "1.7500") &&
            has_vertex(il, "1.5000", "0.0000") && has_vertex(is, "0.0000", "1.5536") &&
            has_vertex(is, "1.4792", "0.0727") && has_vertex(is, "1.5000", "0.0000");
  std::ostringstream d;
  d << "M=3 D=20 t=4: outer sum " << to_decimal(max_sum_mg(ol), 4) << " / " << to_decimal(max_sum_mg(os), 4)
    << ", inner vertices " << il.vertices.size() << " / " << is.vertices.size();
  return {"reference-region", ok, d.str()};
}

CheckLine check_counts() {
  bool ok = true;
  std::ostringstream d;
  for (int t = 1; t <= 4; ++t) {
    ClusterPlan plan = clusters(build_network(6 * t, 1), t);
    long long T = t;
    auto tx = count_links(plan, LinkSide::TX);
    auto rx = count_links(plan, LinkSide::RX);
    for (const auto& c : tx) ok = ok && c.links == 36 * T * T;
    for (const auto& c : rx) ok = ok && c.links == 18 * T * T;
    for (int M : {1, 3}) {
      ok = ok && conferencing_message_count(plan, Scheme::S4, M, LinkSide::TX) == 2 * M * T * (8 * T * T + 3 * T - 2);
      ok = ok && conferencing_message_count(plan, Scheme::S4, M, LinkSide::RX) == 3 * M * (3 * T * T - 1);
      Rational m(M), r(t);
      auto s4 = required_prelogs(Scheme::S4, t, M);
      auto s5 = required_prelogs(Scheme::S5, t, M);
      ok = ok && s4.mu_tx * 36 * r * r == 2 * m * r * (8 * r * r + 3 * r - 2);
      ok = ok && s4.mu_rx * 18 * r * r == 3 * m * (3 * r * r - 1);
      ok = ok && s5.mu_tx * 36 * r * r == 6 * m * r * (2 * r - 1);
      ok = ok && s5.mu_rx * 18 * r * r == m * (8 * r * r * r + 6 * r * r + r - 3);
    }
    d << "t=" << t << ": " << tx.size() << " interior clusters, TX " << tx.front().links << ", RX "
      << rx.front().links << "; ";
  }
  d << "S4/S5 message counts and prelogs exact for M in {1,3}";
  return {"counting-formulas", ok, d.str()};
}

CheckLine check_fractions(int radius) {
  auto at_r = fraction_suite(radius);
  auto at20 = fraction_suite(20);
  auto at40 = fraction_suite(40);
  bool ok = radius >= 30;
  double worst = 0.0;
  std::vector<std::string> not_shrinking;
  for (std::size_t i = 0; i < at_r.size(); ++i) {
    worst = std::max(worst, at_r[i].abs_error());
    if (at_r[i].abs_error() > 0.02) ok = false;
    if (!(at40[i].abs_error() < at20[i].abs_error())) {
      ok = false;
      not_shrinking.push_back(at20[i].name);
    }
  }
  std::ostringstream d;
  d << at_r.size() << " interior fractions at radius " << radius << ", worst error " << fmt(worst)
    << "; error shrinks from radius 20 to 40";
  if (!not_shrinking.empty()) {
    d << " except:";
    for (const auto& n : not_shrinking) d << " " << n;
  }
  return {"fraction-limits", ok, d.str()};
}

CheckLine check_zf(std::uint64_t seed, int trials) {
  bool ok = true;
  double worst = 0.0;
  int runs = 0;
  for (ZfScheme s : {ZfScheme::S3, ZfScheme::S4, ZfScheme::S5})
    for (int t : {1, 2})
      for (int M : {1, 2})
        for (const auto& tr : run_zf_trials(t, M, s, trials, seed, 1e-9)) {
          ++runs;
          ok = ok && tr.report.solvable && tr.report.min_self_rank == M;
          if (!tr.rank_deficient) worst = std::max(worst, tr.report.max_cross_residual);
        }
  std::ostringstream d;
  d << runs << " trials over s3/s4/s5, (t, M) in {1,2}x{1,2}, max relative residual " << format_sci(worst, 2);
  return {"zero-forcing", ok, d.str()};
}

CheckLine check_schedules() {
  bool ok = true;
  int plans = 0, deletions = 0;
  Partition two = partition_two(build_network(2, 1));
  for (int D : {3, 20}) {
    Partition four = partition_four(build_network(3 * D, 1), D);
    for (int dt = 0; dt <= D; ++dt)
      for (int dr = 0; dr + dt <= D; ++dr) {
        for (const SchedulePlan& plan : {schedule_algorithm1(two, dt, dr, D), schedule_algorithm2(four, dt, dr)}) {
          ++plans;
          ok = ok && validate_schedule(plan).ok;
          for (std::size_t i = 0; i < plan.steps.size(); ++i) {
            StepKind k = plan.steps[i].kind;
            bool key = k == StepKind::DECODE || k == StepKind::RECONSTRUCT;
            // Every step is removed on the balanced split, key steps on all splits.
            if (!key && !(dt == D / 2 && dr == D - D / 2)) continue;
            SchedulePlan cut = plan;
            cut.steps.erase(cut.steps.begin() + static_cast<long>(i));
            auto rep = validate_schedule(cut);
            ++deletions;
            ok = ok && !rep.ok && (!key || rep.has('c'));
          }
          SchedulePlan no_genie = plan;
          no_genie.initial.erase("G");
          auto rep = validate_schedule(no_genie);
          bool hit = false;
          for (const auto& v : rep.violations)
            hit = hit || (v.rule == 'a' && v.step >= 0 && no_genie.steps[static_cast<std::size_t>(v.step)].kind == StepKind::RECONSTRUCT);
          ok = ok && hit;
        }
      }
  }
  std::ostringstream d;
  d << plans << " canonical plans valid for D in {3,20}, " << deletions
    << " deletions all flagged, genie removal breaks RECONSTRUCT";
  return {"converse-schedules", ok, d.str()};
}

CheckLine check_structural() {
  bool ok = true;
  int pairs = 0;
  const std::vector<Rational> mus{0, Rational(1, 10), Rational(1, 5), 1, 10};
  for (int M : {1, 2, 3})
    for (int D : {4, 8, 12, 20}) {
      for (const auto& a : mus)
        for (const auto& b : mus) {
          SystemParams p{M, a, b, D};
          ok = ok && is_subset(inner_bound(p), outer_bound(p));
          ++pairs;
        }
      SystemParams big{M, 1000, 1000, D};
      Rational m(M);
      int tmax = std::min(max_admissible_t(PointScheme::S2_3_SLOW, D), max_admissible_t(PointScheme::S4_5_MIXED, D));
      for (int t = 1; t <= tmax; ++t) {
        Rational r(t);
        MGPoint mix = scheme_point(PointScheme::S4_5_MIXED, t, big);
        MGPoint slow = scheme_point(PointScheme::S2_3_SLOW, t, big);
        ok = ok && mix.sf + mix.ss == m * (3 * r - 1) / (3 * r) && slow.sf + slow.ss == mix.sf + mix.ss;
      }
      for (int t = 1; t <= (D - 2) / 4; ++t) {
        Rational r(t);
        auto s4 = required_prelogs(Scheme::S4, t, M);
        auto s5 = required_prelogs(Scheme::S5, t, M);
        Rational dual = m * (4 * r * r - 1) * (2 * r + 3) / (18 * r * r);
        ok = ok && s4.mu_tx + s4.mu_rx == dual && s5.mu_tx + s5.mu_rx == dual;
        SystemParams p{M, Rational(1, 10), Rational(1, 5), D};
        SystemParams q{M, Rational(1, 5), Rational(1, 10), D};
        ok = ok && scheme_point(PointScheme::S4_5_MIXED, t, p) == scheme_point(PointScheme::S4_5_MIXED, t, q);
      }
    }
  std::ostringstream d;
  d << "inner within outer for " << pairs << " parameter sets; sum preservation and S4/S5 duality exact";
  return {"structural-checks", ok, d.str()};
}

std::string artifacts(int radius, std::uint64_t seed) {
  std::ostringstream os;
  Network net = build_network(radius, 1);
  write_lattice_csv(os, net);
  write_cluster_csv(os, assign_messages(clusters(net, 2), AssignMode::MIXED));
  SystemParams p{3, Rational(1, 10), Rational(1, 5), 20};
  write_region_svg(os, {{"inner", boundary_samples(inner_bound(p), 16)}, {"outer", boundary_samples(outer_bound(p), 16)}});
  write_zf_csv(os, run_zf_trials(1, 2, ZfScheme::S4, 5, seed, 1e-9));
  return os.str();
}

CheckLine check_determinism(int radius, std::uint64_t seed) {
  std::string a = artifacts(radius, seed);
  std::string b = artifacts(radius, seed);
  return {"determinism", a == b, std::to_string(a.size()) + " bytes of emitted artifacts identical across rebuilds"};
}

}  // namespace

std::vector<CheckLine> verify_all(const VerifyOptions& opt) {
  std::vector<CheckLine> out;
  out.push_back(check_lattice(opt.radius));
  out.push_back(check_reference_region());
  out.push_back(check_counts());
  out.push_back(check_fractions(opt.radius));
  out.push_back(check_zf(opt.seed, opt.zf_trials));
  out.push_back(check_schedules());
  out.push_back(check_structural());
  out.push_back(check_determinism(opt.radius, opt.seed));
  return out;
}

std::string format_report(const VerifyOptions& opt, const std::vector<CheckLine>& lines) {
  std::ostringstream os;
  os << "verify-all radius=" << opt.radius << " seed=" << opt.seed << " zf_trials=" << opt.zf_trials << "\n";
  int passed = 0;
  for (const auto& l : lines) {
    os << (l.pass ? "PASS " : "FAIL ") << l.name << ": " << l.detail << "\n";
    passed += l.pass ? 1 : 0;
  }
  os << "summary: " << passed << "/" << lines.size() << " passed\n";
  return os.str();
}

}  // namespace hexmg

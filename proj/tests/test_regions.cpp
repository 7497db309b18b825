#include "doctest.h"

#include "hexmg/rational.hpp"
#include "hexmg/regions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

using namespace hexmg;

namespace {

SystemParams params(int M, Rational tx, Rational rx, int D) { return {M, tx, rx, D}; }

const Rational kLarge(10);
const Rational kTx(1, 10);
const Rational kRx(1, 5);

bool has_vertex(const Region& r, const std::string& sf, const std::string& ss) {
  for (const auto& v : r.vertices)
    if (to_decimal(v.sf, 4) == sf && to_decimal(v.ss, 4) == ss) return true;
  return false;
}

std::vector<std::string> rounded(const Region& r) {
  std::vector<std::string> out;
  for (const auto& v : r.vertices) out.push_back(to_decimal(v.sf, 4) + "," + to_decimal(v.ss, 4));
  return out;
}

// Signed area twice over, used as an independent convexity oracle.
Rational cross(const MGPoint& o, const MGPoint& a, const MGPoint& b) {
  return (a.sf - o.sf) * (b.ss - o.ss) - (a.ss - o.ss) * (b.sf - o.sf);
}

}  // namespace

TEST_CASE("rational parsing and decimal emission") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("1/10") == Rational(1, 10));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-2.5e-1") == Rational(-1, 4));
  CHECK(parse_rational("1e2") == Rational(100));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(to_decimal(Rational(1, 3)) == "0.333333");
  CHECK(to_decimal(Rational(2, 3)) == "0.666667");
  CHECK(to_decimal(Rational(1, 2000000)) == "0.000000");
  CHECK(to_decimal(Rational(3, 2000000)) == "0.000002");
  CHECK(to_decimal(Rational(-3, 2)) == "-1.500000");
  CHECK(to_decimal(Rational(7), 0) == "7");
  CHECK(to_fraction_string(Rational(6, 4)) == "3/2");
}

TEST_CASE("scheme points for the reference configuration") {
  auto big = params(3, kLarge, kLarge, 20);
  auto small = params(3, kTx, kRx, 20);
  CHECK(scheme_point(PointScheme::S4_5_MIXED, 4, big) == MGPoint{1, Rational(7, 4)});
  MGPoint m = scheme_point(PointScheme::S4_5_MIXED, 4, small);
  CHECK(to_decimal(m.sf, 4) == "1.4792");
  CHECK(to_decimal(m.ss, 4) == "0.0727");
  MGPoint s = scheme_point(PointScheme::S2_3_SLOW, 4, small);
  CHECK(s.sf == 0);
  CHECK(s.ss == Rational(3, 2) + Rational(3, 10) * 10 / 56);
  CHECK(to_decimal(s.ss, 4) == "1.5536");
  CHECK(scheme_point(PointScheme::S1, 1, small) == MGPoint{Rational(3, 2), 0});
}

TEST_CASE("scheme point errors") {
  auto p = params(3, kTx, kRx, 20);
  CHECK_THROWS_AS(scheme_point(PointScheme::S2_3_SLOW, 11, p), std::out_of_range);
  CHECK_THROWS_AS(scheme_point(PointScheme::S4_5_MIXED, 10, p), std::out_of_range);
  CHECK_THROWS_AS(scheme_point(PointScheme::S4_5_MIXED, 0, p), std::out_of_range);
  CHECK_THROWS(scheme_point(PointScheme::S1, 1, params(3, -1, 0, 20)));
}

TEST_CASE("mixed point is linear in the budget and hits the full pair at saturation") {
  for (int t = 1; t <= 4; ++t) {
    int M = 3;
    Rational T(t);
    Rational need = Rational(M) * (4 * T * T - 1) * (2 * T + 3) / (18 * T * T);
    // Budget split evenly between Tx and Rx with t inside the both-sides range.
    auto at = [&](Rational lambda) {
      return scheme_point(PointScheme::S4_5_MIXED, t, params(M, lambda * need / 2, lambda * need / 2, 4 * t + 2));
    };
    MGPoint full = at(1);
    CHECK(full == MGPoint{Rational(M, 3), Rational(M) * (2 * T - 1) / (3 * T)});
    CHECK(at(2) == full);
    MGPoint half = at(Rational(1, 2));
    MGPoint zero = at(0);
    CHECK(zero == MGPoint{Rational(M, 2), 0});
    CHECK(half.sf == (zero.sf + full.sf) / 2);
    CHECK(half.ss == (zero.ss + full.ss) / 2);
  }
}

TEST_CASE("sum preservation between mixed and slow-only points") {
  for (int t = 1; t <= 5; ++t) {
    int M = 2;
    auto p = params(M, 1000, 1000, 4 * t + 2);
    MGPoint a = scheme_point(PointScheme::S4_5_MIXED, t, p);
    MGPoint b = scheme_point(PointScheme::S2_3_SLOW, t, p);
    Rational T(t);
    CHECK(a.sf + a.ss == Rational(M) * (3 * T - 1) / (3 * T));
    CHECK(b.sf + b.ss == Rational(M) * (3 * T - 1) / (3 * T));
  }
}

TEST_CASE("mixed point only sees the prelog sum in the both-sides range") {
  for (int D : {6, 10, 20})
    for (int t = 1; t <= (D - 2) / 4; ++t)
      CHECK(scheme_point(PointScheme::S4_5_MIXED, t, params(3, kTx, kRx, D)) ==
            scheme_point(PointScheme::S4_5_MIXED, t, params(3, kRx, kTx, D)));
}

TEST_CASE("inner bound vertices match the reference figure at t = 4") {
  TRange t4{4, 4};
  Region big = inner_bound(params(3, kLarge, kLarge, 20), t4);
  CHECK(rounded(big) == std::vector<std::string>{"0.0000,0.0000", "1.5000,0.0000", "1.0000,1.7500", "0.0000,2.7500"});
  Region small = inner_bound(params(3, kTx, kRx, 20), t4);
  CHECK(has_vertex(small, "0.0000", "1.5536"));
  CHECK(has_vertex(small, "1.4792", "0.0727"));
  CHECK(has_vertex(small, "1.5000", "0.0000"));
  CHECK(small.vertices.size() == 4);
}

TEST_CASE("inner bound at zero prelog degenerates to the slow-only triangle") {
  Region r = inner_bound(params(3, 0, 0, 20));
  CHECK(r.vertices == std::vector<MGPoint>{{0, 0}, {Rational(3, 2), 0}, {0, Rational(3, 2)}});
}

TEST_CASE("outer bound intercepts for the reference configuration") {
  Region big = outer_bound(params(3, kLarge, kLarge, 20));
  CHECK(has_vertex(big, "0.0000", "2.9964"));
  CHECK(has_vertex(big, "1.5000", "1.4964"));
  CHECK(to_decimal(max_sum_mg(big), 4) == "2.9964");
  CHECK(max_sum_mg(big) == Rational(3) * (1 - Rational(1, 2 * 421)));
  Region small = outer_bound(params(3, kTx, kRx, 20));
  CHECK(has_vertex(small, "0.0000", "1.7667"));
  CHECK(has_vertex(small, "1.5000", "0.2667"));
  for (int D : {1, 2, 5}) {
    Region tri = outer_bound(params(3, 0, 0, D));
    CHECK(tri.vertices == std::vector<MGPoint>{{0, 0}, {Rational(3, 2), 0}, {0, Rational(3, 2)}});
  }
}

TEST_CASE("outer bound saturates where the legend threshold says") {
  // Solve M/2 + (2 mu_rx + 4 mu_tx)/3 = M(1 - 1/(2(1 + D + D^2))) for mu_rx + 2 mu_tx.
  int M = 3, D = 20;
  Rational cap = Rational(M) * (1 - Rational(1, 2 * (1 + D + D * D)));
  Rational threshold = (cap - Rational(M, 2)) * 3 / 2;
  // The legend prints the threshold truncated to four decimals.
  CHECK(threshold == Rational(945, 421));
  CHECK(threshold > parse_rational("2.2446"));
  CHECK(threshold < parse_rational("2.2447"));
  Rational below = threshold - Rational(1, 1000), above = threshold + Rational(1, 1000);
  CHECK(outer_sum_cap(params(M, 0, below, D)) < cap);
  CHECK(outer_sum_cap(params(M, 0, above, D)) == cap);
  CHECK(outer_sum_cap(params(M, above / 2, 0, D)) == cap);
}

TEST_CASE("convex hull canonical form") {
  CHECK(convex_hull({{0, 0}}).vertices == std::vector<MGPoint>{{0, 0}});
  Region r = convex_hull({{0, 1}, {1, 0}, {Rational(1, 2), Rational(1, 2)}});
  CHECK(r.vertices == std::vector<MGPoint>{{0, 0}, {1, 0}, {0, 1}});
  Region dup = convex_hull({{0, 1}, {1, 0}, {0, 1}, {1, 0}, {Rational(1, 2), Rational(1, 2)}});
  CHECK(dup.vertices == r.vertices);
  CHECK_THROWS_AS(convex_hull({}), std::invalid_argument);
  CHECK_THROWS(convex_hull({{-1, 0}}));
}

TEST_CASE("hull vertices are counter-clockwise with no collinear triples") {
  Region r = inner_bound(params(3, kTx, kRx, 20));
  const auto& v = r.vertices;
  REQUIRE(v.size() >= 3);
  CHECK(v.front() == MGPoint{0, 0});
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(cross(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]) > 0);
}

TEST_CASE("containment and subsets") {
  Region inner = inner_bound(params(3, kTx, kRx, 20));
  Region outer = outer_bound(params(3, kTx, kRx, 20));
  CHECK(contains(inner, {0, 0}));
  CHECK(contains(outer, {0, 0}));
  CHECK(is_subset(inner, outer));
  CHECK_FALSE(is_subset(outer, inner));
  CHECK_FALSE(contains(outer, {Rational(3, 2), 1}));
  CHECK(contains(convex_hull({{0, 0}}), {0, 0}));
  CHECK_FALSE(contains(convex_hull({{0, 0}}), {1, 0}));
}

TEST_CASE("inner bound lies inside the outer bound over the sweep") {
  std::vector<Rational> mus{0, Rational(1, 10), Rational(1, 5), 1, 10};
  for (int M : {1, 2, 3})
    for (int D : {4, 8, 12, 20})
      for (const auto& tx : mus)
        for (const auto& rx : mus) {
          auto p = params(M, tx, rx, D);
          CHECK(is_subset(inner_bound(p), outer_bound(p)));
        }
}

TEST_CASE("bounds are monotone in prelogs and delay") {
  std::vector<Rational> mus{0, Rational(1, 10), Rational(1, 5), 1, 10};
  for (int M : {1, 3})
    for (int D : {4, 8, 12})
      for (std::size_t i = 0; i + 1 < mus.size(); ++i) {
        auto lo = params(M, mus[i], mus[i], D);
        auto up_tx = params(M, mus[i + 1], mus[i], D);
        auto up_rx = params(M, mus[i], mus[i + 1], D);
        auto up_d = params(M, mus[i], mus[i], D + 1);
        for (const auto& hi : {up_tx, up_rx, up_d}) {
          CHECK(is_subset(inner_bound(lo), inner_bound(hi)));
          CHECK(is_subset(outer_bound(lo), outer_bound(hi)));
        }
      }
}

TEST_CASE("boundary samples trace the upper-right chain") {
  Region tri = outer_bound(params(3, 0, 0, 20));
  CHECK(boundary_samples(tri, 2) == std::vector<MGPoint>{{0, Rational(3, 2)}, {Rational(3, 2), 0}});
  Region r = inner_bound(params(3, kTx, kRx, 20));
  auto pts = boundary_samples(r, 25);
  CHECK(pts.size() == 25);
  CHECK(pts.front().sf == 0);
  CHECK(pts.back().ss == 0);
  for (const auto& p : pts) CHECK(contains(r, p));
  for (const auto& v : r.vertices)
    if (v.sf + v.ss > 0) CHECK(std::find(pts.begin(), pts.end(), v) != pts.end());
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1].sf <= pts[i].sf);
  CHECK_THROWS(boundary_samples(r, 1));
}

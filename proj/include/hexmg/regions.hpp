#pragma once

#include "hexmg/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hexmg {

struct MGPoint {
  Rational sf;  // fast multiplexing gain
  Rational ss;  // slow multiplexing gain
  bool operator==(const MGPoint&) const = default;
};

struct SystemParams {
  int M = 1;
  Rational mu_tx;
  Rational mu_rx;
  int D = 1;
};

// Counter-clockwise vertices starting at the origin, no collinear triples.
struct Region {
  std::vector<MGPoint> vertices;
};

enum class PointScheme { S1, S2_3_SLOW, S4_5_MIXED };

std::string to_string(PointScheme s);

// Inclusive range of scheme parameters t.
struct TRange {
  int lo = 1;
  int hi = 1;
};

// Largest t the scheme accepts under delay budget D (0 if none).
int max_admissible_t(PointScheme s, int D);

Rational prelog_need(PointScheme s, int t, int M);
Rational available_prelog(PointScheme s, int t, const SystemParams& p);

MGPoint scheme_point(PointScheme s, int t, const SystemParams& p);

// With a range, only scheme points for t inside it enter the hull.
Region inner_bound(const SystemParams& p, std::optional<TRange> ts = std::nullopt);
Region outer_bound(const SystemParams& p);

Rational outer_sum_cap(const SystemParams& p);

Region convex_hull(const std::vector<MGPoint>& points);

bool contains(const Region& r, const MGPoint& pt);
bool is_subset(const Region& a, const Region& b);
Rational max_sum_mg(const Region& r);

// Points along the upper-right boundary from (0, ss_max) to (sf_max, 0).
// Every vertex is kept; if n is smaller than the vertex count all vertices
// are returned.
std::vector<MGPoint> boundary_samples(const Region& r, int n);

}  // namespace hexmg

#include "hexmg/regions.hpp"

#include <algorithm>
#include <stdexcept>

namespace hexmg {

namespace {

Rational cross(const MGPoint& o, const MGPoint& a, const MGPoint& b) {
  return (a.sf - o.sf) * (b.ss - o.ss) - (a.ss - o.ss) * (b.sf - o.sf);
}

bool lex_less(const MGPoint& a, const MGPoint& b) {
  if (a.sf != b.sf) return a.sf < b.sf;
  return a.ss < b.ss;
}

void check_params(const SystemParams& p) {
  if (p.M < 1) throw std::invalid_argument("M must be >= 1");
  if (p.D < 1) throw std::invalid_argument("D must be >= 1");
  if (p.mu_tx < 0 || p.mu_rx < 0) throw std::invalid_argument("prelogs must be non-negative");
}

}  // namespace

std::string to_string(PointScheme s) {
  switch (s) {
    case PointScheme::S1: return "S1";
    case PointScheme::S2_3_SLOW: return "S2_3_SLOW";
    case PointScheme::S4_5_MIXED: return "S4_5_MIXED";
  }
  return "?";
}

int max_admissible_t(PointScheme s, int D) {
  switch (s) {
    case PointScheme::S1: return 0;
    case PointScheme::S2_3_SLOW: return D / 2;
    case PointScheme::S4_5_MIXED: return D >= 2 ? (D - 2) / 2 : 0;
  }
  return 0;
}

Rational prelog_need(PointScheme s, int t, int M) {
  Rational T(t), m(M);
  switch (s) {
    case PointScheme::S1: return 0;
    case PointScheme::S2_3_SLOW: return m * (2 * T - 1) / 3;
    case PointScheme::S4_5_MIXED: return m * (4 * T * T - 1) * (2 * T + 3) / (18 * T * T);
  }
  return 0;
}

Rational available_prelog(PointScheme s, int t, const SystemParams& p) {
  if (s == PointScheme::S1) return 0;
  if (t < 1 || t > max_admissible_t(s, p.D))
    throw std::out_of_range(to_string(s) + ": t = " + std::to_string(t) + " is not admissible for D = " +
                            std::to_string(p.D));
  // Small t leaves room for conferencing on both sides; larger t only on the Rx side.
  int both = s == PointScheme::S2_3_SLOW ? p.D / 4 : (p.D >= 2 ? (p.D - 2) / 4 : 0);
  return t <= both ? Rational(p.mu_tx + p.mu_rx) : p.mu_rx;
}

MGPoint scheme_point(PointScheme s, int t, const SystemParams& p) {
  check_params(p);
  Rational m(p.M);
  if (s == PointScheme::S1) return {m / 2, 0};
  Rational avail = available_prelog(s, t, p);
  Rational need = prelog_need(s, t, p.M);
  Rational lambda = std::min(Rational(1), Rational(avail / need));
  Rational T(t);
  if (s == PointScheme::S2_3_SLOW) return {0, m / 2 + lambda * m * (3 * T - 2) / (6 * T)};
  return {m / 2 - lambda * m / 6, lambda * m * (2 * T - 1) / (3 * T)};
}

Region inner_bound(const SystemParams& p, std::optional<TRange> ts) {
  check_params(p);
  std::vector<MGPoint> pts{{0, 0}, scheme_point(PointScheme::S1, 0, p)};
  for (PointScheme s : {PointScheme::S2_3_SLOW, PointScheme::S4_5_MIXED}) {
    int lo = 1, hi = max_admissible_t(s, p.D);
    if (ts) {
      lo = std::max(lo, ts->lo);
      hi = std::min(hi, ts->hi);
    }
    for (int t = lo; t <= hi; ++t) pts.push_back(scheme_point(s, t, p));
  }
  return convex_hull(pts);
}

Rational outer_sum_cap(const SystemParams& p) {
  check_params(p);
  Rational m(p.M), D(p.D);
  Rational coop = m / 2 + (2 * p.mu_rx + 4 * p.mu_tx) / 3;
  Rational delay = m * (1 - Rational(1) / (2 * (1 + D + D * D)));
  return std::min(coop, delay);
}

Region outer_bound(const SystemParams& p) {
  Rational half = Rational(p.M) / 2;
  Rational cap = outer_sum_cap(p);
  // The sum cap is never below M/2, so the corner (M/2, cap - M/2) exists.
  return convex_hull({{0, 0}, {half, 0}, {half, cap - half}, {0, cap}});
}

Region convex_hull(const std::vector<MGPoint>& points) {
  if (points.empty()) throw std::invalid_argument("convex_hull needs at least one point");
  std::vector<MGPoint> pts{{0, 0}};
  for (const auto& p : points) {
    if (p.sf < 0 || p.ss < 0) throw std::invalid_argument("multiplexing gains must be non-negative");
    pts.push_back(p);
    pts.push_back({p.sf, 0});
    pts.push_back({0, p.ss});
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return {pts};

  // Andrew's monotone chain; strict turns drop collinear points.
  std::vector<MGPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return {hull};
}

bool contains(const Region& r, const MGPoint& pt) {
  if (pt.sf < 0 || pt.ss < 0) return false;
  const auto& v = r.vertices;
  if (v.size() == 1) return pt == v[0];
  if (v.size() == 2) {
    const MGPoint& a = v[0];
    const MGPoint& b = v[1];
    if (cross(a, b, pt) != 0) return false;
    return std::min(a.sf, b.sf) <= pt.sf && pt.sf <= std::max(a.sf, b.sf) && std::min(a.ss, b.ss) <= pt.ss &&
           pt.ss <= std::max(a.ss, b.ss);
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (cross(v[i], v[(i + 1) % v.size()], pt) < 0) return false;
  return true;
}

bool is_subset(const Region& a, const Region& b) {
  return std::all_of(a.vertices.begin(), a.vertices.end(), [&](const MGPoint& p) { return contains(b, p); });
}

Rational max_sum_mg(const Region& r) {
  Rational best = 0;
  for (const auto& p : r.vertices) best = std::max(best, Rational(p.sf + p.ss));
  return best;
}

std::vector<MGPoint> boundary_samples(const Region& r, int n) {
  if (n < 2) throw std::invalid_argument("boundary_samples needs n >= 2");
  // Upper-right chain: vertices after the origin, in clockwise order.
  std::vector<MGPoint> chain(r.vertices.rbegin(), r.vertices.rend());
  chain.pop_back();
  if (chain.empty()) chain.push_back({0, 0});
  if (chain.front().sf != 0) chain.insert(chain.begin(), MGPoint{0, 0});
  if (chain.back().ss != 0) chain.push_back({0, 0});
  std::size_t extra = static_cast<std::size_t>(n) > chain.size() ? n - chain.size() : 0;
  if (chain.size() < 2 || extra == 0) return chain;

  std::size_t edges = chain.size() - 1;
  std::vector<Rational> len(edges);
  Rational total = 0;
  for (std::size_t i = 0; i < edges; ++i) {
    len[i] = boost::multiprecision::abs(chain[i + 1].sf - chain[i].sf) +
             boost::multiprecision::abs(chain[i + 1].ss - chain[i].ss);
    total += len[i];
  }
  // Largest remainder apportionment of the extra points by L1 edge length.
  std::vector<std::size_t> alloc(edges, 0);
  std::vector<std::pair<Rational, std::size_t>> rem;
  std::size_t used = 0;
  for (std::size_t i = 0; i < edges; ++i) {
    Rational share = total == 0 ? Rational(0) : len[i] * extra / total;
    BigInt whole = boost::multiprecision::numerator(share) / boost::multiprecision::denominator(share);
    alloc[i] = whole.convert_to<std::size_t>();
    used += alloc[i];
    rem.emplace_back(share - Rational(whole), i);
  }
  std::stable_sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t j = 0; used < extra; ++j, ++used) alloc[rem[j % rem.size()].second] += 1;

  std::vector<MGPoint> out;
  for (std::size_t i = 0; i < edges; ++i) {
    out.push_back(chain[i]);
    std::size_t parts = alloc[i] + 1;
    for (std::size_t j = 1; j < parts; ++j) {
      Rational f(static_cast<long long>(j), static_cast<long long>(parts));
      out.push_back({chain[i].sf + f * (chain[i + 1].sf - chain[i].sf),
                     chain[i].ss + f * (chain[i + 1].ss - chain[i].ss)});
    }
  }
  out.push_back(chain.back());
  return out;
}

}  // namespace hexmg

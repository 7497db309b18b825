#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the geometry of the library under test.

#include "hexmg/hexlattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using hexmg::CellCoord;
using hexmg::SectorId;

inline const std::vector<CellCoord>& steps() {
  static const std::vector<CellCoord> s{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  return s;
}

// Hop distance by breadth-first search on the six-neighbour adjacency.
inline int bfs_distance(CellCoord a, CellCoord b) {
  if (a == b) return 0;
  std::map<CellCoord, int> seen{{a, 0}};
  std::deque<CellCoord> todo{a};
  while (!todo.empty()) {
    CellCoord c = todo.front();
    todo.pop_front();
    for (const auto& d : steps()) {
      CellCoord n{c.q + d.q, c.r + d.r};
      if (seen.count(n)) continue;
      seen[n] = seen[c] + 1;
      if (n == b) return seen[n];
      todo.push_back(n);
    }
  }
  return -1;
}

// Cube-coordinate distance; cross-checked against bfs_distance in the tests.
inline int cube_distance(CellCoord a, CellCoord b) {
  int dx = a.q - b.q, dz = a.r - b.r, dy = -dx - dz;
  return std::max({std::abs(dx), std::abs(dy), std::abs(dz)});
}

// Cells within `radius` hops of the origin, found by flood fill.
inline std::set<CellCoord> ball(int radius) {
  std::set<CellCoord> out{{0, 0}};
  std::vector<CellCoord> frontier{{0, 0}};
  for (int k = 0; k < radius; ++k) {
    std::vector<CellCoord> next;
    for (const auto& c : frontier)
      for (const auto& d : steps()) {
        CellCoord n{c.q + d.q, c.r + d.r};
        if (out.insert(n).second) next.push_back(n);
      }
    frontier = std::move(next);
  }
  return out;
}

// Integer span of the master basis t*(1,1) and t*(2,-1), clipped to the ball.
inline std::set<CellCoord> master_span(int t, int radius) {
  std::set<CellCoord> out;
  int lim = 2 * radius + 2;
  for (int a = -lim; a <= lim; ++a)
    for (int b = -lim; b <= lim; ++b) {
      CellCoord c{t * a + 2 * t * b, t * a - t * b};
      if (cube_distance(c, {0, 0}) <= radius) out.insert(c);
    }
  return out;
}

inline long long basis_index(long long a1, long long b1, long long a2, long long b2) {
  return std::llabs(a1 * b2 - a2 * b1);
}

// Nearest master by exhaustive scan, ties broken by smallest (q, r).
inline CellCoord nearest_master(CellCoord c, const std::set<CellCoord>& masters) {
  CellCoord best{};
  int bd = -1;
  for (const auto& m : masters) {
    int d = cube_distance(c, m);
    if (bd < 0 || d < bd) {
      bd = d;
      best = m;
    }
  }
  return best;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Connected components of the interference graph restricted to `active`.
inline std::map<SectorId, int> components(const hexmg::Network& net, const std::set<SectorId>& active) {
  std::vector<SectorId> v(active.begin(), active.end());
  std::map<SectorId, int> idx;
  for (std::size_t i = 0; i < v.size(); ++i) idx[v[i]] = static_cast<int>(i);
  UnionFind uf(v.size());
  for (const auto& k : v)
    for (const auto& l : net.tx_neighbors(k))
      if (idx.count(l)) uf.unite(idx[k], idx[l]);
  std::map<SectorId, int> out;
  for (const auto& k : v) out[k] = uf.find(idx[k]);
  return out;
}

// Maximum independent set size by branch and bound (small graphs only).
inline int max_independent_set(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  int best = 0;
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int taken, int left) -> void {
    if (taken + left <= best) return;
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!removed[static_cast<std::size_t>(i)]) {
        v = i;
        break;
      }
    if (v < 0) {
      best = std::max(best, taken);
      return;
    }
    std::vector<int> gone{v};
    removed[static_cast<std::size_t>(v)] = 1;
    for (int u : adj[static_cast<std::size_t>(v)])
      if (!removed[static_cast<std::size_t>(u)]) {
        removed[static_cast<std::size_t>(u)] = 1;
        gone.push_back(u);
      }
    self(self, taken + 1, left - static_cast<int>(gone.size()));
    for (int u : gone) removed[static_cast<std::size_t>(u)] = 0;
    removed[static_cast<std::size_t>(v)] = 1;
    self(self, taken, left - 1);
    removed[static_cast<std::size_t>(v)] = 0;
  };
  rec(rec, 0, n);
  return best;
}

}  // namespace oracle

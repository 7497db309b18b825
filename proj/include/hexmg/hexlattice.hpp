#pragma once

#include <array>
#include <compare>
#include <memory>
#include <ostream>
#include <utility>
#include <vector>

namespace hexmg {

struct CellCoord {
  int q = 0;
  int r = 0;
  auto operator<=>(const CellCoord&) const = default;
};

inline CellCoord operator+(CellCoord a, CellCoord b) { return {a.q + b.q, a.r + b.r}; }
inline CellCoord operator-(CellCoord a, CellCoord b) { return {a.q - b.q, a.r - b.r}; }
inline CellCoord operator*(int k, CellCoord a) { return {k * a.q, k * a.r}; }

struct SectorId {
  CellCoord cell;
  int orientation = 0;  // 0, 1 or 2
  auto operator<=>(const SectorId&) const = default;
};

std::ostream& operator<<(std::ostream& os, const CellCoord& c);
std::ostream& operator<<(std::ostream& os, const SectorId& s);

// Unit steps in axial coordinates, counter-clockwise. Step i points at
// angle 30 + 60 i degrees when cells are drawn flat-topped.
inline constexpr std::array<CellCoord, 6> kHexDirs{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

inline CellCoord hex_dir(int i) { return kHexDirs[((i % 6) + 6) % 6]; }

int cell_distance(CellCoord a, CellCoord b);

// Interferers of sector k on the unbounded lattice. Sector o owns the full
// hexagon edge towards hex_dir(2o) and half of the edges towards hex_dir(2o +- 1).
std::array<SectorId, 4> tx_rule(const SectorId& k);

class Network {
 public:
  int radius() const;
  int antennas() const;
  const std::vector<CellCoord>& cells() const;
  const std::vector<SectorId>& sectors() const;

  bool contains(CellCoord c) const;
  bool contains(const SectorId& s) const;

  // Hop distance from c to the outermost ring; cells with depth >= 2 are interior.
  int depth(CellCoord c) const;
  bool interior(const SectorId& s) const { return depth(s.cell) >= 2; }

  // Sorted; throw std::invalid_argument for ids outside the lattice.
  const std::vector<SectorId>& tx_neighbors(const SectorId& k) const;
  const std::vector<CellCoord>& rx_neighbors(CellCoord c) const;

  std::size_t sector_index(const SectorId& s) const;
  std::size_t cell_index(CellCoord c) const;

  struct Impl;

 private:
  friend Network build_network(int radius, int M);
  std::shared_ptr<const Impl> impl_;
};

Network build_network(int radius, int M);

inline const std::vector<SectorId>& tx_neighbors(const Network& net, const SectorId& k) {
  return net.tx_neighbors(k);
}

// Each unordered edge once, as (smaller, larger), sorted.
std::vector<std::pair<SectorId, SectorId>> interference_graph(const Network& net);

}  // namespace hexmg

#include "hexmg/hexlattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hexmg {

std::ostream& operator<<(std::ostream& os, const CellCoord& c) {
  return os << "(" << c.q << "," << c.r << ")";
}

std::ostream& operator<<(std::ostream& os, const SectorId& s) {
  return os << s.cell << "/" << s.orientation;
}

int cell_distance(CellCoord a, CellCoord b) {
  int dq = a.q - b.q;
  int dr = a.r - b.r;
  return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

std::array<SectorId, 4> tx_rule(const SectorId& k) {
  int o = k.orientation;
  CellCoord across = k.cell + hex_dir(2 * o);
  return {{{across, (o + 1) % 3},
           {across, (o + 2) % 3},
           {k.cell + hex_dir(2 * o + 1), (o + 2) % 3},
           {k.cell + hex_dir(2 * o - 1), (o + 1) % 3}}};
}

struct Network::Impl {
  int radius = 0;
  int M = 0;
  int side = 0;  // 2 * radius + 1, width of the dense index box
  std::vector<CellCoord> cells;
  std::vector<SectorId> sectors;
  std::vector<int> box;  // dense (q, r) box -> cell index or -1
  std::vector<std::vector<SectorId>> tx;
  std::vector<std::vector<CellCoord>> rx;

  int lookup(CellCoord c) const {
    if (cell_distance(c, {0, 0}) > radius) return -1;
    return box[static_cast<std::size_t>((c.q + radius) * side + (c.r + radius))];
  }
};

int Network::radius() const { return impl_->radius; }
int Network::antennas() const { return impl_->M; }
const std::vector<CellCoord>& Network::cells() const { return impl_->cells; }
const std::vector<SectorId>& Network::sectors() const { return impl_->sectors; }

bool Network::contains(CellCoord c) const { return impl_->lookup(c) >= 0; }

bool Network::contains(const SectorId& s) const {
  return s.orientation >= 0 && s.orientation < 3 && contains(s.cell);
}

int Network::depth(CellCoord c) const { return impl_->radius - cell_distance(c, {0, 0}); }

std::size_t Network::cell_index(CellCoord c) const {
  int i = impl_->lookup(c);
  if (i < 0) {
    std::ostringstream msg;
    msg << "cell " << c << " is not in the lattice";
    throw std::invalid_argument(msg.str());
  }
  return static_cast<std::size_t>(i);
}

std::size_t Network::sector_index(const SectorId& s) const {
  if (s.orientation < 0 || s.orientation > 2) {
    std::ostringstream msg;
    msg << "sector " << s << " has no such orientation";
    throw std::invalid_argument(msg.str());
  }
  return cell_index(s.cell) * 3 + static_cast<std::size_t>(s.orientation);
}

const std::vector<SectorId>& Network::tx_neighbors(const SectorId& k) const {
  return impl_->tx[sector_index(k)];
}

const std::vector<CellCoord>& Network::rx_neighbors(CellCoord c) const {
  return impl_->rx[cell_index(c)];
}

Network build_network(int radius, int M) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1, got " + std::to_string(radius));
  if (M < 1) throw std::invalid_argument("M must be >= 1, got " + std::to_string(M));

  auto impl = std::make_shared<Network::Impl>();
  impl->radius = radius;
  impl->M = M;
  impl->side = 2 * radius + 1;
  impl->box.assign(static_cast<std::size_t>(impl->side) * impl->side, -1);

  for (int q = -radius; q <= radius; ++q)
    for (int r = -radius; r <= radius; ++r)
      if (cell_distance({q, r}, {0, 0}) <= radius) {
        impl->box[static_cast<std::size_t>((q + radius) * impl->side + (r + radius))] =
            static_cast<int>(impl->cells.size());
        impl->cells.push_back({q, r});
      }

  impl->sectors.reserve(impl->cells.size() * 3);
  for (const auto& c : impl->cells)
    for (int o = 0; o < 3; ++o) impl->sectors.push_back({c, o});

  impl->tx.resize(impl->sectors.size());
  for (std::size_t i = 0; i < impl->sectors.size(); ++i) {
    auto& out = impl->tx[i];
    for (const auto& n : tx_rule(impl->sectors[i]))
      if (impl->lookup(n.cell) >= 0) out.push_back(n);
    std::sort(out.begin(), out.end());
  }

  impl->rx.resize(impl->cells.size());
  for (std::size_t i = 0; i < impl->cells.size(); ++i) {
    auto& out = impl->rx[i];
    for (const auto& d : kHexDirs) {
      CellCoord n = impl->cells[i] + d;
      if (impl->lookup(n) >= 0) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
  }

  Network net;
  net.impl_ = std::move(impl);
  return net;
}

std::vector<std::pair<SectorId, SectorId>> interference_graph(const Network& net) {
  std::vector<std::pair<SectorId, SectorId>> edges;
  for (const auto& k : net.sectors())
    for (const auto& l : net.tx_neighbors(k))
      if (k < l) edges.emplace_back(k, l);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace hexmg

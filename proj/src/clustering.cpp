#include "hexmg/clustering.hpp"

#include <algorithm>
#include <stdexcept>

namespace hexmg {

namespace {

// Orientation that straddles a Voronoi edge cell, indexed by ring side mod 3.
constexpr int kEdgeSide[3] = {1, 0, 2};

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

std::string to_string(Role r) {
  switch (r) {
    case Role::SILENT: return "SILENT";
    case Role::SLOW: return "SLOW";
    case Role::FAST: return "FAST";
  }
  return "?";
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::S1: return "S1";
    case Scheme::S2: return "S2";
    case Scheme::S3: return "S3";
    case Scheme::S4: return "S4";
    case Scheme::S5: return "S5";
  }
  return "?";
}

Role ClusterPlan::role(const SectorId& s) const {
  if (silenced.count(s)) return Role::SILENT;
  auto it = assignment.find(s);
  if (it == assignment.end()) throw std::logic_error("plan has no message assignment for this sector");
  return it->second;
}

bool ClusterPlan::is_master_user(const SectorId& s) const {
  return s.orientation == 0 && is_master_cell(s.cell, t) && net.contains(s);
}

bool is_master_cell(CellCoord c, int t) {
  // Lattice spanned by t(2,-1) and t(1,1).
  return floor_mod(c.q - c.r, 3 * t) == 0 && floor_mod(c.q + 2 * c.r, 3 * t) == 0;
}

std::vector<CellCoord> master_grid(const Network& net, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (3 * t > net.radius())
    throw std::invalid_argument("t = " + std::to_string(t) + " needs radius >= " + std::to_string(3 * t));
  std::vector<CellCoord> out;
  for (const auto& c : net.cells())
    if (is_master_cell(c, t)) out.push_back(c);
  return out;
}

std::pair<int, std::vector<CellCoord>> nearest_masters(CellCoord c, int t) {
  // The covering radius of the master lattice is t.
  int best = t + 1;
  std::vector<CellCoord> out;
  for (int dq = -t; dq <= t; ++dq)
    for (int dr = -t; dr <= t; ++dr) {
      CellCoord m{c.q + dq, c.r + dr};
      int d = cell_distance(m, c);
      if (d > t || !is_master_cell(m, t)) continue;
      if (d < best) {
        best = d;
        out.clear();
      }
      if (d == best) out.push_back(m);
    }
  std::sort(out.begin(), out.end());
  return {best, out};
}

std::vector<int> silenced_orientations(CellCoord c, int t) {
  auto [d, ms] = nearest_masters(c, t);
  if (d != t) return {};
  CellCoord rel = c - ms.front();
  // Walk the ring: rel = t * dir(i) + k * dir(i + 2), 0 <= k < t.
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < t; ++k) {
      if (t * hex_dir(i) + k * hex_dir(i + 2) != rel) continue;
      if (k == 0) {
        if (i % 2 == 0) return {0, 1, 2};
        return {};
      }
      return {kEdgeSide[i % 3]};
    }
  throw std::logic_error("ring position not found");
}

std::set<SectorId> silenced_sectors(const Network& net, int t) {
  master_grid(net, t);  // validates t
  std::set<SectorId> out;
  for (const auto& c : net.cells())
    for (int o : silenced_orientations(c, t)) out.insert({c, o});
  return out;
}

CellCoord sector_master(const SectorId& k, int t) {
  auto [d, ms] = nearest_masters(k.cell, t);
  if (d < t || ms.size() == 1) return ms.front();
  CellCoord across = k.cell + hex_dir(2 * k.orientation);
  CellCoord best = ms.front();
  int bd = cell_distance(best, across);
  for (const auto& m : ms) {
    int dm = cell_distance(m, across);
    if (dm < bd) {
      best = m;
      bd = dm;
    }
  }
  return best;
}

ClusterPlan clusters(const Network& net, int t) {
  ClusterPlan plan;
  plan.net = net;
  plan.t = t;
  plan.masters = master_grid(net, t);
  plan.silenced = silenced_sectors(net, t);

  std::map<CellCoord, Cluster> by_master;
  for (const auto& s : net.sectors()) {
    if (plan.silenced.count(s)) continue;
    by_master[sector_master(s, t)].sectors.push_back(s);
  }
  for (const auto& c : net.cells()) {
    CellCoord m = nearest_masters(c, t).second.front();
    by_master[m].owned_cells.push_back(c);
  }

  for (auto& [m, cl] : by_master) {
    if (cl.sectors.empty()) continue;
    cl.id = static_cast<int>(plan.clusters.size());
    cl.master = m;
    cl.master_user = {m, 0};
    cl.master_in_lattice = net.contains(m);
    cl.interior = cell_distance(m, {0, 0}) + t + 1 <= net.radius();
    std::sort(cl.sectors.begin(), cl.sectors.end());
    for (const auto& s : cl.sectors) plan.cluster_of[s] = cl.id;
    plan.clusters.push_back(std::move(cl));
  }
  return plan;
}

bool fast_pattern(const SectorId& k, CellCoord master) {
  CellCoord rel = k.cell - master;
  // Three open cones around the master, each spanned by two unit steps
  // 120 degrees apart; one orientation per cone carries fast messages.
  for (int i : {1, 3, 5}) {
    CellCoord u = hex_dir(i - 1);
    CellCoord v = hex_dir(i + 1);
    int det = u.q * v.r - u.r * v.q;
    int an = rel.q * v.r - rel.r * v.q;
    int bn = u.q * rel.r - u.r * rel.q;
    if (an % det != 0 || bn % det != 0) continue;
    int a = an / det;
    int b = bn / det;
    if (a >= 1 && b >= 1) return k.orientation == ((i + 3) / 2) % 3;
  }
  return false;
}

ClusterPlan assign_messages(ClusterPlan plan, AssignMode mode) {
  if (mode == AssignMode::NONE) throw std::invalid_argument("assignment mode must be SLOW_ONLY or MIXED");
  plan.mode = mode;
  plan.assignment.clear();
  for (const auto& s : plan.net.sectors()) {
    if (plan.silenced.count(s)) {
      plan.assignment[s] = Role::SILENT;
      continue;
    }
    const Cluster& cl = plan.clusters[static_cast<std::size_t>(plan.cluster_of.at(s))];
    bool fast = mode == AssignMode::MIXED && fast_pattern(s, cl.master);
    plan.assignment[s] = fast ? Role::FAST : Role::SLOW;
  }
  return plan;
}

std::vector<ClusterLinkCount> count_links(const ClusterPlan& plan, LinkSide side) {
  std::vector<ClusterLinkCount> out;
  for (const auto& cl : plan.clusters) {
    if (!cl.interior) continue;
    long long n = 0;
    for (const auto& c : cl.owned_cells) {
      if (side == LinkSide::RX) {
        n += static_cast<long long>(plan.net.rx_neighbors(c).size());
      } else {
        for (int o = 0; o < 3; ++o) n += static_cast<long long>(plan.net.tx_neighbors({c, o}).size());
      }
    }
    out.push_back({cl.id, n});
  }
  if (out.empty())
    throw std::runtime_error("no interior cluster at radius " + std::to_string(plan.net.radius()) +
                             " for t = " + std::to_string(plan.t));
  return out;
}

PrelogRequirement required_prelogs(Scheme scheme, int t, int M) {
  if (t < 1) throw std::out_of_range("t must be >= 1");
  if (M < 1) throw std::out_of_range("M must be >= 1");
  Rational T(t), m(M);
  Rational slow = m * (2 * T - 1) / 3;
  switch (scheme) {
    case Scheme::S1: return {0, 0};
    case Scheme::S2: return {0, slow};
    case Scheme::S3: return {slow, 0};
    case Scheme::S4:
      return {2 * m * T * (8 * T * T + 3 * T - 2) / (36 * T * T), 3 * m * (3 * T * T - 1) / (18 * T * T)};
    case Scheme::S5:
      return {6 * m * T * (2 * T - 1) / (36 * T * T), m * (8 * T * T * T + 6 * T * T + T - 3) / (18 * T * T)};
  }
  throw std::invalid_argument("unknown scheme");
}

long long conferencing_message_count(const ClusterPlan& plan, Scheme scheme, int M, LinkSide side) {
  long long links = count_links(plan, side).front().links;
  long long t = plan.t;
  if (scheme == Scheme::S4)
    return side == LinkSide::TX ? 2LL * M * t * (8 * t * t + 3 * t - 2) : 3LL * M * (3 * t * t - 1);
  if (scheme != Scheme::S3 && scheme != Scheme::S5)
    throw std::invalid_argument("conferencing counts are defined for S3, S4 and S5 only");
  PrelogRequirement p = required_prelogs(scheme, plan.t, M);
  Rational mu = side == LinkSide::TX ? p.mu_tx : p.mu_rx;
  if (mu == 0)
    throw std::invalid_argument(to_string(scheme) + " uses no " + (side == LinkSide::TX ? "Tx" : "Rx") +
                                " conferencing");
  Rational total = mu * links;
  if (boost::multiprecision::denominator(total) != 1)
    throw std::logic_error("non-integral message count " + to_fraction_string(total));
  return boost::multiprecision::numerator(total).convert_to<long long>();
}

RoleCensus role_census(const ClusterPlan& plan, int min_depth) {
  RoleCensus c;
  for (const auto& s : plan.net.sectors()) {
    if (plan.net.depth(s.cell) < min_depth) continue;
    ++c.sectors;
    switch (plan.role(s)) {
      case Role::SILENT: ++c.silent; break;
      case Role::SLOW: ++c.slow; break;
      case Role::FAST: ++c.fast; break;
    }
  }
  return c;
}

int central_cluster(const ClusterPlan& plan) {
  for (const auto& cl : plan.clusters)
    if (cl.master == CellCoord{0, 0}) return cl.id;
  throw std::logic_error("origin master missing");
}

}  // namespace hexmg

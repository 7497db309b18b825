#pragma once

#include "hexmg/hexlattice.hpp"
#include "hexmg/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hexmg {

enum class Role { SILENT, SLOW, FAST };
enum class AssignMode { NONE, SLOW_ONLY, MIXED };
enum class LinkSide { TX, RX };
enum class Scheme { S1, S2, S3, S4, S5 };

std::string to_string(Role r);
std::string to_string(Scheme s);

struct Cluster {
  int id = 0;
  CellCoord master;
  SectorId master_user;      // orientation-0 sector of the master cell
  bool master_in_lattice = true;
  bool interior = false;     // all sectors and their interferers lie inside the lattice
  std::vector<SectorId> sectors;  // active sectors, sorted
  std::vector<CellCoord> owned_cells;  // cells whose nearest master is this one
};

struct ClusterPlan {
  Network net;
  int t = 1;
  std::vector<CellCoord> masters;  // master cells inside the lattice, sorted
  std::set<SectorId> silenced;
  std::vector<Cluster> clusters;   // ordered by master
  std::map<SectorId, int> cluster_of;  // active sector -> index into clusters
  AssignMode mode = AssignMode::NONE;
  std::map<SectorId, Role> assignment;  // filled by assign_messages

  Role role(const SectorId& s) const;
  bool is_master_user(const SectorId& s) const;
  const Cluster& cluster(int id) const { return clusters.at(static_cast<std::size_t>(id)); }
};

struct PrelogRequirement {
  Rational mu_tx;
  Rational mu_rx;
};

// True when c belongs to the master lattice of parameter t.
bool is_master_cell(CellCoord c, int t);

// Master lattice inside the network; requires 3t <= radius.
std::vector<CellCoord> master_grid(const Network& net, int t);

// Masters at the minimum distance from c, sorted, together with that distance.
std::pair<int, std::vector<CellCoord>> nearest_masters(CellCoord c, int t);

// Orientations silenced in cell c (empty unless c is exactly t hops from a master).
std::vector<int> silenced_orientations(CellCoord c, int t);

std::set<SectorId> silenced_sectors(const Network& net, int t);

// Master cell whose cluster the active sector k joins.
CellCoord sector_master(const SectorId& k, int t);

ClusterPlan clusters(const Network& net, int t);

// FAST membership for an active sector relative to its master.
bool fast_pattern(const SectorId& k, CellCoord master);

ClusterPlan assign_messages(ClusterPlan plan, AssignMode mode);

struct ClusterLinkCount {
  int cluster_id = 0;
  long long links = 0;
};

std::vector<ClusterLinkCount> count_links(const ClusterPlan& plan, LinkSide side);

long long conferencing_message_count(const ClusterPlan& plan, Scheme scheme, int M, LinkSide side);

PrelogRequirement required_prelogs(Scheme scheme, int t, int M);

struct RoleCensus {
  long long sectors = 0;
  long long silent = 0;
  long long slow = 0;
  long long fast = 0;
};

// Counts roles over sectors at depth >= min_depth.
RoleCensus role_census(const ClusterPlan& plan, int min_depth = 2);

// Index of the cluster whose master is the origin.
int central_cluster(const ClusterPlan& plan);

}  // namespace hexmg

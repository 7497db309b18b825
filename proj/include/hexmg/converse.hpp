#pragma once

#include "hexmg/hexlattice.hpp"
#include "hexmg/rational.hpp"
#include "hexmg/regions.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace hexmg {

enum class Color { RED, WHITE, PINK, BLUE };
enum class PartitionKind { TWO_COLOR, FOUR_COLOR };

std::string to_string(Color c);

struct Partition {
  PartitionKind kind = PartitionKind::TWO_COLOR;
  int D = 0;  // four-colour only
  Network net;
  std::map<CellCoord, Color> coloring;
  std::map<Color, long long> census;

  Color color(CellCoord c) const { return coloring.at(c); }
  long long count(Color c) const;
  long long total() const { return static_cast<long long>(coloring.size()); }
};

// Limiting fraction of a colour class on the unbounded lattice.
Rational limit_fraction(PartitionKind kind, int D, Color c);

std::vector<Color> colors_of(PartitionKind kind);

Partition partition_two(const Network& net);
Partition partition_four(const Network& net, int D);

// Lattice coefficients (a, b) of c in the basis (D, 1), (-1, D + 1), if c is a lattice point.
bool four_color_lattice_point(CellCoord c, int D, long long* a = nullptr, long long* b = nullptr);

enum class StepKind { RX_CONF, TX_CONF, DECODE, ENCODE, RECONSTRUCT };

std::string to_string(StepKind k);

struct Step {
  StepKind kind = StepKind::DECODE;
  int phase = 0;
  int round_index = 0;  // conferencing steps only
  std::set<std::string> consumes;
  std::set<std::string> produces;
  std::string note;
};

struct SchedulePlan {
  std::string algorithm;
  int D_t = 0;
  int D_r = 0;
  int D = 0;
  std::set<std::string> initial;
  std::vector<Step> steps;
  std::set<std::string> claims;
};

struct Violation {
  char rule = 'a';  // 'a' availability, 'b' round budget, 'c' claims, 'd' delay budget
  int step = -1;    // index into steps, -1 for plan-level violations
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  std::set<std::string> final_resources;

  bool has(char rule) const;
};

// Red/white schedule; D defaults to D_t + D_r when negative.
SchedulePlan schedule_algorithm1(const Partition& p, int D_t, int D_r, int D = -1);
SchedulePlan schedule_algorithm2(const Partition& p, int D_t, int D_r);

ValidationReport validate_schedule(const SchedulePlan& plan);

Rational bound_arithmetic(const Partition& p, const SystemParams& params);

// Closed form the finite bound tends to as the lattice grows.
Rational bound_limit(PartitionKind kind, const SystemParams& params, int D);

}  // namespace hexmg

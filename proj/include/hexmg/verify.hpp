#pragma once

#include "hexmg/clustering.hpp"
#include "hexmg/converse.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hexmg {

struct FractionStat {
  std::string name;
  long long count = 0;
  long long total = 0;
  Rational limit;

  double fraction() const { return total ? static_cast<double>(count) / static_cast<double>(total) : 0.0; }
  double abs_error() const;
};

// Role fractions over interior sectors (depth >= 2) of an assigned plan.
std::vector<FractionStat> role_fractions(const ClusterPlan& plan);

// Colour fractions over interior cells (depth >= 2).
std::vector<FractionStat> partition_fractions(const Partition& p);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int radius = 30;
  std::uint64_t seed = 42;
  int zf_trials = 100;
};

std::vector<CheckLine> verify_all(const VerifyOptions& opt);
std::string format_report(const VerifyOptions& opt, const std::vector<CheckLine>& lines);

}  // namespace hexmg

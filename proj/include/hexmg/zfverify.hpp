#pragma once

#include "hexmg/clustering.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hexmg {

enum class ZfScheme { S3, S4, S5 };

std::string to_string(ZfScheme s);

struct ChannelRealization {
  std::uint64_t seed = 0;
  int M = 1;
  int cluster_id = -1;
  std::vector<SectorId> sectors;  // active sectors of the cluster
  // (receiving sector, transmitting sector) -> M x M block
  std::map<std::pair<SectorId, SectorId>, Eigen::MatrixXd> entries;

  const Eigen::MatrixXd* block(const SectorId& rx, const SectorId& tx) const;
};

struct ZfSystem {
  ZfScheme scheme = ZfScheme::S3;
  int M = 1;
  std::vector<SectorId> transmitters;  // precoder owners
  std::vector<SectorId> streams;       // one M-stream block per SLOW sector
  // Receivers whose effective channel from a stream is constrained, per stream.
  std::vector<std::vector<SectorId>> rows;
  long long unknowns = 0;
  long long constraints = 0;
};

struct Precoder {
  ZfScheme scheme = ZfScheme::S3;
  int M = 1;
  std::vector<SectorId> streams;
  // transmitter -> M x (M * streams) matrix
  std::map<SectorId, Eigen::MatrixXd> blocks;
};

struct NullingReport {
  double max_cross_residual = 0.0;
  int min_self_rank = 0;
  bool solvable = false;
};

class RankDeficientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ChannelRealization sample_channels(const ClusterPlan& plan, int cluster_id, int M, std::uint64_t seed);

ZfSystem build_zf_system(const ClusterPlan& plan, const ChannelRealization& ch, ZfScheme scheme);

Precoder solve_precoder(const ZfSystem& sys, const ChannelRealization& ch);

// Effective channels are recomputed from the channel map, independent of the solver.
NullingReport verify_nulling(const Precoder& p, const ClusterPlan& plan, const ChannelRealization& ch, double tol);

struct ZfTrial {
  int trial = 0;
  std::uint64_t seed = 0;
  NullingReport report;
  bool rank_deficient = false;
};

// One trial per seed offset on the cluster around the origin master.
std::vector<ZfTrial> run_zf_trials(int t, int M, ZfScheme scheme, int trials, std::uint64_t seed, double tol);

}  // namespace hexmg

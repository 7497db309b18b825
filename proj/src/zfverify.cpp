#include "hexmg/zfverify.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace hexmg {

namespace {

double op_norm(const Eigen::MatrixXd& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  return svd.singularValues()(0);
}

int numeric_rank(const Eigen::MatrixXd& a, double floor) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > floor) ++r;
  return r;
}

AssignMode mode_for(ZfScheme s) { return s == ZfScheme::S3 ? AssignMode::SLOW_ONLY : AssignMode::MIXED; }

}  // namespace

std::string to_string(ZfScheme s) {
  switch (s) {
    case ZfScheme::S3: return "s3";
    case ZfScheme::S4: return "s4";
    case ZfScheme::S5: return "s5";
  }
  return "?";
}

const Eigen::MatrixXd* ChannelRealization::block(const SectorId& rx, const SectorId& tx) const {
  auto it = entries.find({rx, tx});
  return it == entries.end() ? nullptr : &it->second;
}

ChannelRealization sample_channels(const ClusterPlan& plan, int cluster_id, int M, std::uint64_t seed) {
  if (M < 1) throw std::invalid_argument("M must be >= 1");
  if (cluster_id < 0 || cluster_id >= static_cast<int>(plan.clusters.size()))
    throw std::out_of_range("no cluster with id " + std::to_string(cluster_id));
  const Cluster& cl = plan.cluster(cluster_id);

  ChannelRealization ch;
  ch.seed = seed;
  ch.M = M;
  ch.cluster_id = cluster_id;
  ch.sectors = cl.sectors;

  std::set<SectorId> members(cl.sectors.begin(), cl.sectors.end());
  std::set<std::pair<SectorId, SectorId>> links;
  for (const auto& k : cl.sectors) {
    links.insert({k, k});
    for (const auto& l : plan.net.tx_neighbors(k))
      if (members.count(l)) links.insert({k, l});
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (const auto& key : links) {
    Eigen::MatrixXd h(M, M);
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j) h(i, j) = gauss(rng);
    ch.entries.emplace(key, std::move(h));
  }
  return ch;
}

ZfSystem build_zf_system(const ClusterPlan& plan, const ChannelRealization& ch, ZfScheme scheme) {
  if (ch.sectors.empty()) throw std::invalid_argument("cluster has no active sectors");
  if (plan.mode != mode_for(scheme))
    throw std::logic_error("scheme " + to_string(scheme) + " needs a " +
                           (scheme == ZfScheme::S3 ? "SLOW_ONLY" : "MIXED") + " assignment");

  ZfSystem sys;
  sys.scheme = scheme;
  sys.M = ch.M;
  sys.transmitters = ch.sectors;
  std::vector<SectorId> fast;
  for (const auto& s : ch.sectors) {
    Role r = plan.role(s);
    if (r == Role::SLOW) sys.streams.push_back(s);
    if (r == Role::FAST) fast.push_back(s);
  }
  if (sys.streams.empty()) throw std::invalid_argument("cluster carries no slow messages");

  for (const auto& j : sys.streams) {
    if (scheme == ZfScheme::S5) {
      // Slow-to-slow leakage is left to joint receiver processing.
      std::vector<SectorId> rows = fast;
      rows.push_back(j);
      std::sort(rows.begin(), rows.end());
      sys.rows.push_back(std::move(rows));
    } else {
      sys.rows.push_back(ch.sectors);
    }
  }

  long long m2 = static_cast<long long>(ch.M) * ch.M;
  sys.unknowns = static_cast<long long>(sys.transmitters.size()) * static_cast<long long>(sys.streams.size()) * m2;
  for (const auto& rows : sys.rows) sys.constraints += static_cast<long long>(rows.size()) * m2;
  return sys;
}

Precoder solve_precoder(const ZfSystem& sys, const ChannelRealization& ch) {
  const int M = sys.M;
  const auto ntx = static_cast<Eigen::Index>(sys.transmitters.size());
  const auto nstreams = static_cast<Eigen::Index>(sys.streams.size());

  Precoder p;
  p.scheme = sys.scheme;
  p.M = M;
  p.streams = sys.streams;
  for (const auto& l : sys.transmitters) p.blocks[l] = Eigen::MatrixXd::Zero(M, M * nstreams);

  for (Eigen::Index j = 0; j < nstreams; ++j) {
    const auto& rows = sys.rows[static_cast<std::size_t>(j)];
    const auto nrows = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(nrows * M, ntx * M);
    Eigen::MatrixXd target = Eigen::MatrixXd::Zero(nrows * M, M);
    for (Eigen::Index a = 0; a < nrows; ++a) {
      for (Eigen::Index b = 0; b < ntx; ++b)
        if (const auto* h = ch.block(rows[static_cast<std::size_t>(a)], sys.transmitters[static_cast<std::size_t>(b)]))
          G.block(a * M, b * M, M, M) = *h;
      if (rows[static_cast<std::size_t>(a)] == sys.streams[static_cast<std::size_t>(j)])
        target.block(a * M, 0, M, M).setIdentity();
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(G);
    if (cod.rank() < G.rows()) {
      std::ostringstream msg;
      msg << "zero-forcing system for stream " << sys.streams[static_cast<std::size_t>(j)] << " has rank "
          << cod.rank() << " < " << G.rows();
      throw RankDeficientError(msg.str());
    }
    Eigen::MatrixXd x = cod.solve(target);
    for (Eigen::Index b = 0; b < ntx; ++b)
      p.blocks[sys.transmitters[static_cast<std::size_t>(b)]].block(0, j * M, M, M) = x.block(b * M, 0, M, M);
  }
  return p;
}

NullingReport verify_nulling(const Precoder& p, const ClusterPlan& plan, const ChannelRealization& ch, double tol) {
  const int M = p.M;
  if (M != ch.M) throw std::invalid_argument("precoder and channel disagree on M");
  const auto nstreams = static_cast<Eigen::Index>(p.streams.size());
  for (const auto& [tx, blk] : p.blocks)
    if (blk.rows() != M || blk.cols() != M * nstreams)
      throw std::invalid_argument("precoder block has the wrong shape");

  // E(k, j) = sum over transmitters l of H(k, l) P(l, j), for every active receiver k.
  const auto& rx = ch.sectors;
  const auto nrx = static_cast<Eigen::Index>(rx.size());
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(nrx * M, nstreams * M);
  for (Eigen::Index a = 0; a < nrx; ++a)
    for (const auto& [tx, blk] : p.blocks)
      if (const auto* h = ch.block(rx[static_cast<std::size_t>(a)], tx)) E.middleRows(a * M, M) += *h * blk;

  std::map<SectorId, Eigen::Index> row_of;
  for (Eigen::Index a = 0; a < nrx; ++a) row_of[rx[static_cast<std::size_t>(a)]] = a;

  double worst_cross = 0.0;
  double best_self = 0.0;
  std::vector<Eigen::MatrixXd> selfs;

  if (p.scheme == ZfScheme::S5) {
    // FAST receivers must see no slow signal at all.
    for (Eigen::Index a = 0; a < nrx; ++a)
      if (plan.role(rx[static_cast<std::size_t>(a)]) == Role::FAST)
        worst_cross = std::max(worst_cross, op_norm(E.middleRows(a * M, M)));
    // Slow receivers share their observations and invert the slow block jointly.
    Eigen::MatrixXd Es(nstreams * M, nstreams * M);
    for (Eigen::Index j = 0; j < nstreams; ++j) Es.middleRows(j * M, M) = E.middleRows(row_of.at(p.streams[static_cast<std::size_t>(j)]) * M, M);
    // Extended precision: a poorly conditioned draw would otherwise leak cond(Es) * eps.
    using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    MatrixXld Esl = Es.cast<long double>();
    Eigen::MatrixXd F = Eigen::CompleteOrthogonalDecomposition<MatrixXld>(Esl).solve(Esl).cast<double>();
    for (Eigen::Index k = 0; k < nstreams; ++k)
      for (Eigen::Index j = 0; j < nstreams; ++j) {
        Eigen::MatrixXd b = F.block(k * M, j * M, M, M);
        if (k == j) {
          selfs.push_back(b);
          best_self = std::max(best_self, op_norm(b));
        } else {
          worst_cross = std::max(worst_cross, op_norm(b));
        }
      }
  } else {
    for (Eigen::Index a = 0; a < nrx; ++a)
      for (Eigen::Index j = 0; j < nstreams; ++j) {
        Eigen::MatrixXd b = E.block(a * M, j * M, M, M);
        if (rx[static_cast<std::size_t>(a)] == p.streams[static_cast<std::size_t>(j)]) {
          selfs.push_back(b);
          best_self = std::max(best_self, op_norm(b));
        } else {
          worst_cross = std::max(worst_cross, op_norm(b));
        }
      }
  }

  NullingReport rep;
  if (best_self > 0.0)
    rep.max_cross_residual = worst_cross / best_self;
  else
    rep.max_cross_residual = worst_cross == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  rep.min_self_rank = selfs.empty() ? 0 : M;
  double floor = std::max(best_self * 1e-9, std::numeric_limits<double>::min());
  for (const auto& s : selfs) rep.min_self_rank = std::min(rep.min_self_rank, numeric_rank(s, floor));
  rep.solvable = rep.max_cross_residual <= tol && rep.min_self_rank == M;
  return rep;
}

std::vector<ZfTrial> run_zf_trials(int t, int M, ZfScheme scheme, int trials, std::uint64_t seed, double tol) {
  if (trials < 0) throw std::invalid_argument("trials must be >= 0");
  Network net = build_network(3 * t, M);
  ClusterPlan plan = assign_messages(clusters(net, t), mode_for(scheme));
  int cid = central_cluster(plan);
  std::vector<ZfTrial> out;
  for (int i = 0; i < trials; ++i) {
    ZfTrial tr;
    tr.trial = i;
    tr.seed = seed + static_cast<std::uint64_t>(i);
    ChannelRealization ch = sample_channels(plan, cid, M, tr.seed);
    ZfSystem sys = build_zf_system(plan, ch, scheme);
    try {
      tr.report = verify_nulling(solve_precoder(sys, ch), plan, ch, tol);
    } catch (const RankDeficientError&) {
      tr.rank_deficient = true;
    }
    out.push_back(tr);
  }
  return out;
}

}  // namespace hexmg

// Shared test utilities: seeded random instances and independent oracle
// evaluators. The oracles re-derive values through different code paths than
// the library (odometer partition enumeration, raw-map objective sums) so
// the tests do not check an implementation against itself.
#pragma once

#include <map>
#include <vector>

#include "modnet/cover.hpp"
#include "modnet/graph.hpp"
#include "modnet/partition.hpp"
#include "modnet/rng.hpp"
#include "modnet/score.hpp"

namespace testutil {

using namespace modnet;

inline WeightedGraph random_simple_graph(int n, double edge_prob, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform01() < edge_prob) edges.push_back({i, j, 1.0});
  // edge lists cannot leave nodes isolated, but the graph type can
  return WeightedGraph(n, edges);
}

inline WeightedGraph random_weighted_graph(int n, double edge_prob, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform01() < edge_prob) edges.push_back({i, j, rng.uniform(0.05, 1.0)});
  return WeightedGraph(n, edges);
}

/// Random quadratic (or cubic) score, not tied to any graph.
inline ClusterScore random_score(int n, bool cubic, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> mu1(static_cast<std::size_t>(n));
  for (double& m : mu1) m = rng.uniform(-1.0, 1.0);
  PairMap mu2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform01() < 0.7) mu2.emplace(pair_key(i, j), rng.uniform(-1.0, 1.0));
  TripleMap mu3;
  if (cubic)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          if (rng.uniform01() < 0.4) mu3.emplace(triple_key(i, j, k), rng.uniform(-0.5, 0.5));
  return ClusterScore(n, std::move(mu1), std::move(mu2), std::move(mu3), "random");
}

/// Random fuzzy cover: every node spreads mass over a few subsets
/// containing it.
inline FuzzyCover random_cover(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<MembershipDistribution> dists;
  for (int i = 0; i < n; ++i) {
    std::map<NodeSet, double> mass;
    int parts = 1 + static_cast<int>(rng.index(3));
    for (int p = 0; p < parts; ++p) {
      NodeSet a = NodeSet::single(i);
      for (int j = 0; j < n; ++j)
        if (j != i && rng.uniform01() < 0.4) a.add(j);
      mass[a] += rng.uniform(0.1, 1.0);
    }
    double sum = 0.0;
    for (auto& [a, m] : mass) sum += m;
    for (auto& [a, m] : mass) m /= sum;
    dists.emplace_back(i, std::move(mass));
  }
  return FuzzyCover(std::move(dists));
}

/// Random fuzzy clustering: a family of subsets with shared weights, every
/// member of a supported subset carrying mass on it (all singletons are in
/// the family, so every node is covered).
inline FuzzyCover random_fuzzy_clustering(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::map<NodeSet, double> family_weight;
  for (int i = 0; i < n; ++i) family_weight[NodeSet::single(i)] = rng.uniform(0.05, 1.0);
  int extra = 2 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
  for (int e = 0; e < extra; ++e) {
    NodeSet a;
    for (int j = 0; j < n; ++j)
      if (rng.uniform01() < 0.5) a.add(j);
    if (a.size() >= 2) family_weight[a] = rng.uniform(0.05, 1.0);
  }
  std::vector<MembershipDistribution> dists;
  for (int i = 0; i < n; ++i) {
    std::map<NodeSet, double> mass;
    double sum = 0.0;
    for (const auto& [a, w] : family_weight)
      if (a.contains(i)) {
        mass[a] = w;
        sum += w;
      }
    for (auto& [a, m] : mass) m /= sum;
    dists.emplace_back(i, std::move(mass));
  }
  return FuzzyCover(std::move(dists));
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// Raw masses per node; unlike FuzzyCover, rows may hold any nonnegative
/// mass (or none), which the derivative identities need.
using RawCover = std::vector<std::map<NodeSet, double>>;

inline RawCover to_raw(const FuzzyCover& q) {
  RawCover raw(static_cast<std::size_t>(q.n()));
  for (int i = 0; i < q.n(); ++i) raw[static_cast<std::size_t>(i)] = q.dist(i).mass();
  return raw;
}

/// Objective sum computed directly from the raw masses: for every subset
/// receiving mass, evaluate the multilinear form of the member masses.
inline double big_f_raw(const ClusterScore& s, const RawCover& raw) {
  std::map<NodeSet, std::vector<std::pair<int, double>>> sup;
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (const auto& [a, m] : raw[i]) sup[a].emplace_back(static_cast<int>(i), m);
  double total = 0.0;
  for (const auto& [a, entry] : sup) {
    for (std::size_t x = 0; x < entry.size(); ++x) {
      total += entry[x].second * s.mu1(entry[x].first);
      for (std::size_t y = x + 1; y < entry.size(); ++y) {
        total += entry[x].second * entry[y].second * s.mu2(entry[x].first, entry[y].first);
        for (std::size_t z = y + 1; z < entry.size(); ++z)
          total += entry[x].second * entry[y].second * entry[z].second *
                   s.mu3(entry[x].first, entry[y].first, entry[z].first);
      }
    }
  }
  return total;
}

/// Next node-to-cluster assignment in lexicographic order; cluster ids occur
/// first-use-ascending so each partition appears once. Returns false after
/// the last one. Start from the all-zeros assignment.
inline bool next_clustering(std::vector<int>& clus) {
  int n = static_cast<int>(clus.size());
  std::vector<int> max_clus(static_cast<std::size_t>(n));
  max_clus[0] = 0;
  for (int i = 1; i < n; ++i)
    max_clus[static_cast<std::size_t>(i)] =
        std::min(n - 1, std::max(clus[static_cast<std::size_t>(i - 1)] + 1,
                                 max_clus[static_cast<std::size_t>(i - 1)]));
  for (int i = n - 1; i >= 0; --i) {
    if (clus[static_cast<std::size_t>(i)] < max_clus[static_cast<std::size_t>(i)]) {
      ++clus[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j) clus[static_cast<std::size_t>(j)] = 0;
      return true;
    }
  }
  return false;
}

inline Partition assignment_to_partition(const std::vector<int>& clus) {
  int n = static_cast<int>(clus.size());
  int k = 0;
  for (int c : clus) k = std::max(k, c + 1);
  std::vector<NodeSet> blocks(static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(clus[static_cast<std::size_t>(i)])].add(i);
  return Partition(n, std::move(blocks));
}

/// Exhaustive best/worst partition values via the odometer enumeration.
struct PartitionExtremes {
  double best = 0.0, worst = 0.0;
  Partition argbest;
  std::uint64_t best_count = 0;  // partitions within 1e-9 of the best
};

inline PartitionExtremes partition_extremes(const ClusterScore& s) {
  std::vector<int> clus(static_cast<std::size_t>(s.n()), 0);
  PartitionExtremes ex{-1e300, 1e300, Partition::whole(s.n()), 0};
  std::vector<Partition> near_best;
  do {
    Partition p = assignment_to_partition(clus);
    double v = s.eval_partition(p);
    if (v > ex.best) {
      ex.best = v;
      ex.argbest = p;
    }
    ex.worst = std::min(ex.worst, v);
  } while (next_clustering(clus));
  clus.assign(static_cast<std::size_t>(s.n()), 0);
  do {
    Partition p = assignment_to_partition(clus);
    if (s.eval_partition(p) >= ex.best - 1e-9) ++ex.best_count;
  } while (next_clustering(clus));
  return ex;
}

}  // namespace testutil

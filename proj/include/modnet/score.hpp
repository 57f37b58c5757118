#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "modnet/graph.hpp"
#include "modnet/nodeset.hpp"
#include "modnet/partition.hpp"

namespace modnet {

/// Absolute tolerance used for score comparisons and tie detection
/// throughout the library.
inline constexpr double value_tol = 1e-9;

inline std::uint64_t pair_key(int i, int j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

/// i < j < k, each below 2^21.
inline std::uint64_t triple_key(int i, int j, int k) {
  if (i > j) std::swap(i, j);
  if (j > k) std::swap(j, k);
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 42) | (static_cast<std::uint64_t>(j) << 21) |
         static_cast<std::uint64_t>(k);
}

using PairMap = std::unordered_map<std::uint64_t, double>;
using TripleMap = std::unordered_map<std::uint64_t, double>;

/// Cluster score function v in Moebius-coefficient form: coefficients on
/// singletons, pairs and optionally triples determine v on every subset
/// (v of the empty set is 0 by construction). Immutable once built.
class ClusterScore {
public:
  ClusterScore(int n, std::vector<double> mu1, PairMap mu2, TripleMap mu3, std::string label);

  int n() const { return n_; }
  const std::string& label() const { return label_; }

  /// 3 when some triple coefficient is nonzero, else 2.
  int degree() const { return mu3_.empty() ? 2 : 3; }

  double mu1(int i) const { return mu1_.at(static_cast<std::size_t>(i)); }
  double mu2(int i, int j) const {
    auto it = mu2_.find(pair_key(i, j));
    return it == mu2_.end() ? 0.0 : it->second;
  }
  double mu3(int i, int j, int k) const {
    auto it = mu3_.find(triple_key(i, j, k));
    return it == mu3_.end() ? 0.0 : it->second;
  }

  double singleton_value(int i) const { return mu1(i); }
  double pair_value(int i, int j) const { return mu1(i) + mu1(j) + mu2(i, j); }

  /// v(A): sum of coefficients over singletons, pairs and triples inside A.
  double eval_set(const NodeSet& a) const;

  /// V(P): sum of eval_set over blocks.
  double eval_partition(const Partition& p) const;

  const std::vector<double>& mu1_all() const { return mu1_; }
  const PairMap& mu2_map() const { return mu2_; }
  const TripleMap& mu3_map() const { return mu3_; }

private:
  int n_;
  std::vector<double> mu1_;
  PairMap mu2_;
  TripleMap mu3_;
  std::string label_;
};

/// mu1_i = -(w_i / 2w_N)^2, mu2_ij = (w_ij - w_i w_j / 2w_N) / w_N.
/// Requires positive total weight.
ClusterScore modularity_score(const WeightedGraph& g);

/// Edge weights score pairs, dual weights score singletons:
/// mu1_i = (n-1-w_i) / 2(n-1), mu2_ij = w_ij - (1 - (w_i+w_j) / 2(n-1)).
ClusterScore dual_weight_score(const WeightedGraph& g);

/// mu1_i = 1/(1+|N_i|), mu2_ij = a_ij + (|common| - |symdiff|) / |union|
/// over open neighborhoods; pairs of isolated nodes get mu2 = a_ij.
/// Requires a simple graph.
ClusterScore common_neighbor_score(const WeightedGraph& g);

/// Dual-weight coefficients plus a triple term: +beta on complete triples,
/// 0 on connected ones, -beta on disconnected ones. Requires a simple graph
/// and beta in (0,1].
ClusterScore cubic_triangle_score(const WeightedGraph& g, double beta);

/// Score-equivalent variant with every singleton coefficient replaced by the
/// mean and pair coefficients adjusted so that all partition values are
/// preserved. Defined for degree <= 2.
ClusterScore equalize_singletons(const ClusterScore& s);

}  // namespace modnet

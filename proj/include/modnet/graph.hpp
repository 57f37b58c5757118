#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "modnet/nodeset.hpp"
#include "modnet/partition.hpp"

namespace modnet {

struct Edge {
  int u, v;
  double w = 1.0;
};

/// Immutable weighted graph on nodes 0..n-1 with symmetric weights in [0,1].
/// Zero-weight pairs are not stored; a graph is simple when every stored
/// weight is exactly 1. Instances are safe to share across threads.
class WeightedGraph {
public:
  WeightedGraph(int n, const std::vector<Edge>& edges);

  /// Parses "u v" / "u v w" lines; '#' starts a comment. An optional leading
  /// "n <count>" directive declares the node count (required to express
  /// isolated nodes); without it n = 1 + max id and every id must occur.
  static WeightedGraph from_edge_list(std::istream& in);
  static WeightedGraph from_edge_list_file(const std::string& path);

  int n() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  double total_weight() const { return total_weight_; }
  double strength(int i) const;
  double weight(int i, int j) const;
  bool has_edge(int i, int j) const { return weight(i, j) > 0.0; }
  bool simple() const { return simple_; }

  /// Neighbor count; graph must be simple.
  int degree(int i) const;

  /// Sorted (neighbor, weight) pairs.
  const std::vector<std::pair<int, double>>& neighbors(int i) const;

  /// Total weight of pairs inside A; equals |E(A)| on simple graphs.
  double spanned_edge_weight(const NodeSet& a) const;

  /// Open neighborhood of i; graph must be simple.
  NodeSet neighborhood(int i) const;

  /// 3 * triangles / connected triples; graph must be simple and contain at
  /// least one connected triple.
  double clustering_coefficient() const;

  /// Edges in canonical (u < v, ascending) order.
  std::vector<Edge> edges() const;

  bool operator==(const WeightedGraph& other) const;

private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  double total_weight_ = 0.0;
  bool simple_ = true;
  std::vector<std::vector<std::pair<int, double>>> adj_;
  std::vector<double> strength_;

  void check_node(int i) const;
  void require_simple(const char* what) const;
};

// ---------------------------------------------------------------------------
// Benchmark generators
// ---------------------------------------------------------------------------

/// Two complete halves {0..n/2-1}, {n/2..n-1} plus the matching {k, k+n/2}.
/// Requires n even, n > 4; every degree is n/2 and |E| = n^2/4.
WeightedGraph half_regular(int n);

/// Disjoint union of complete graphs, one per block.
WeightedGraph partition_graph(const Partition& p);

/// partition_graph plus noise: each absent pair is added with probability
/// p_add and each present edge removed with probability p_del,
/// independently, deterministically in the seed.
WeightedGraph noisy_partition_graph(const Partition& p, double p_add, double p_del,
                                    std::uint64_t seed);

struct CliqueUnion {
  WeightedGraph graph;
  /// clique_type[m] counts the inclusion-maximal supplied cliques of size m.
  std::vector<int> clique_type;
};

/// Union of complete graphs on the given cliques, which must cover 0..n-1.
CliqueUnion clique_union(const std::vector<NodeSet>& cliques);

}  // namespace modnet

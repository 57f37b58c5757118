#include "modnet/score.hpp"

#include <stdexcept>

namespace modnet {

ClusterScore::ClusterScore(int n, std::vector<double> mu1, PairMap mu2, TripleMap mu3,
                           std::string label)
    : n_(n), mu1_(std::move(mu1)), mu2_(std::move(mu2)), mu3_(std::move(mu3)),
      label_(std::move(label)) {
  if (n < 0) throw std::invalid_argument("score: negative node count");
  if (mu1_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("score: mu1 size mismatch");
  // drop explicit zeros so that degree() and sparsity stay meaningful
  std::erase_if(mu2_, [](const auto& kv) { return kv.second == 0.0; });
  std::erase_if(mu3_, [](const auto& kv) { return kv.second == 0.0; });
}

double ClusterScore::eval_set(const NodeSet& a) const {
  if (a.back() >= n_) throw std::out_of_range("eval_set: member out of range");
  std::vector<int> m = a.members();
  double sum = 0.0;
  for (int i : m) sum += mu1_[static_cast<std::size_t>(i)];
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = x + 1; y < m.size(); ++y) sum += mu2(m[x], m[y]);
  if (!mu3_.empty())
    for (std::size_t x = 0; x < m.size(); ++x)
      for (std::size_t y = x + 1; y < m.size(); ++y)
        for (std::size_t z = y + 1; z < m.size(); ++z) sum += mu3(m[x], m[y], m[z]);
  return sum;
}

double ClusterScore::eval_partition(const Partition& p) const {
  if (p.n() != n_) throw std::invalid_argument("eval_partition: size mismatch");
  double sum = 0.0;
  for (const NodeSet& b : p.blocks()) sum += eval_set(b);
  return sum;
}

ClusterScore modularity_score(const WeightedGraph& g) {
  if (g.total_weight() <= 0.0)
    throw std::invalid_argument("modularity_score: empty graph (total weight 0)");
  int n = g.n();
  double wn = g.total_weight();
  std::vector<double> mu1(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double r = g.strength(i) / (2.0 * wn);
    mu1[static_cast<std::size_t>(i)] = -r * r;
  }
  PairMap mu2;
  mu2.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = (g.weight(i, j) - g.strength(i) * g.strength(j) / (2.0 * wn)) / wn;
      if (v != 0.0) mu2.emplace(pair_key(i, j), v);
    }
  return ClusterScore(n, std::move(mu1), std::move(mu2), {}, "modularity");
}

ClusterScore dual_weight_score(const WeightedGraph& g) {
  int n = g.n();
  if (n < 2) throw std::invalid_argument("dual_weight_score: need at least 2 nodes");
  std::vector<double> mu1(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    mu1[static_cast<std::size_t>(i)] = (n - 1 - g.strength(i)) / (2.0 * (n - 1));
  PairMap mu2;
  mu2.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = g.weight(i, j) - (1.0 - (g.strength(i) + g.strength(j)) / (2.0 * (n - 1)));
      if (v != 0.0) mu2.emplace(pair_key(i, j), v);
    }
  return ClusterScore(n, std::move(mu1), std::move(mu2), {}, "dual-weight");
}

ClusterScore common_neighbor_score(const WeightedGraph& g) {
  if (!g.simple())
    throw std::invalid_argument("common_neighbor_score: requires a simple graph");
  int n = g.n();
  std::vector<NodeSet> nbr(static_cast<std::size_t>(n));
  std::vector<double> mu1(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    nbr[static_cast<std::size_t>(i)] = g.neighborhood(i);
    mu1[static_cast<std::size_t>(i)] = 1.0 / (1.0 + g.degree(i));
  }
  PairMap mu2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const NodeSet& ni = nbr[static_cast<std::size_t>(i)];
      const NodeSet& nj = nbr[static_cast<std::size_t>(j)];
      double a_ij = g.weight(i, j);
      int unions = ni.set_union(nj).size();
      double v = a_ij;
      if (unions > 0) {
        int common = ni.set_intersection(nj).size();
        int symdiff = unions - common;
        v += static_cast<double>(common - symdiff) / static_cast<double>(unions);
      }
      if (v != 0.0) mu2.emplace(pair_key(i, j), v);
    }
  return ClusterScore(n, std::move(mu1), std::move(mu2), {}, "common-neighbor");
}

ClusterScore cubic_triangle_score(const WeightedGraph& g, double beta) {
  if (!g.simple())
    throw std::invalid_argument("cubic_triangle_score: requires a simple graph");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("cubic_triangle_score: beta outside (0,1]");
  ClusterScore base = dual_weight_score(g);
  int n = g.n();
  TripleMap mu3;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        int edges = (g.has_edge(i, j) ? 1 : 0) + (g.has_edge(i, k) ? 1 : 0) +
                    (g.has_edge(j, k) ? 1 : 0);
        if (edges == 3)
          mu3.emplace(triple_key(i, j, k), beta);
        else if (edges <= 1)
          mu3.emplace(triple_key(i, j, k), -beta);
        // two edges: connected but not complete, coefficient 0
      }
  return ClusterScore(n, std::vector<double>(base.mu1_all()), PairMap(base.mu2_map()),
                      std::move(mu3), "cubic-triangle");
}

ClusterScore equalize_singletons(const ClusterScore& s) {
  if (s.degree() > 2)
    throw std::invalid_argument("equalize_singletons: defined for quadratic scores");
  int n = s.n();
  if (n == 0) throw std::invalid_argument("equalize_singletons: empty score");
  double mean = 0.0;
  for (int i = 0; i < n; ++i) mean += s.mu1(i);
  mean /= n;
  // Partition values are the singleton total plus the same-block pair
  // coefficients, so moving every singleton to the mean and leaving the
  // pair coefficients alone preserves V(P) on every partition. Pair
  // values v({i,j}) shift instead.
  std::vector<double> mu1(static_cast<std::size_t>(n), mean);
  return ClusterScore(n, std::move(mu1), PairMap(s.mu2_map()), {}, s.label() + "-equalized");
}

}  // namespace modnet

#include "modnet/cover.hpp"

#include <cmath>
#include <stdexcept>

#include "modnet/errors.hpp"

namespace modnet {

MembershipDistribution::MembershipDistribution(int node, std::map<NodeSet, double> mass,
                                               double sum_tol)
    : node_(node), mass_(std::move(mass)) {
  if (node < 0) throw std::invalid_argument("membership: negative node");
  for (const auto& [a, m] : mass_) {
    if (!a.contains(node)) throw std::invalid_argument("membership: key missing the node");
    if (m < 0.0) throw std::invalid_argument("membership: negative mass");
  }
  std::erase_if(mass_, [](const auto& kv) { return kv.second < mass_prune_tol; });
  if (mass_.empty()) throw std::invalid_argument("membership: node holds no mass");
  double sum = 0.0;
  for (const auto& [a, m] : mass_) sum += m;
  if (std::abs(sum - 1.0) > sum_tol)
    throw std::invalid_argument("membership: masses do not sum to 1");
  if (sum != 1.0)
    for (auto& [a, m] : mass_) m /= sum;
}

FuzzyCover::FuzzyCover(std::vector<MembershipDistribution> dists) : dists_(std::move(dists)) {
  for (std::size_t i = 0; i < dists_.size(); ++i) {
    if (dists_[i].node() != static_cast<int>(i))
      throw std::invalid_argument("cover: distributions must be indexed by node");
    for (const auto& [a, m] : dists_[i].mass())
      if (a.back() >= static_cast<int>(dists_.size()))
        throw std::invalid_argument("cover: subset member out of range");
  }
}

SupportMap FuzzyCover::support() const {
  SupportMap sup;
  for (const MembershipDistribution& d : dists_)
    for (const auto& [a, m] : d.mass()) sup[a].emplace_back(d.node(), m);
  return sup;
}

FuzzyCover partition_to_cover(const Partition& p) {
  std::vector<MembershipDistribution> dists;
  dists.reserve(static_cast<std::size_t>(p.n()));
  for (int i = 0; i < p.n(); ++i) {
    const NodeSet& block = p.blocks()[static_cast<std::size_t>(p.block_of(i))];
    dists.emplace_back(i, std::map<NodeSet, double>{{block, 1.0}});
  }
  return FuzzyCover(std::move(dists));
}

FuzzyCover uniform_cover(int n) {
  if (n <= 0) throw std::invalid_argument("uniform_cover: n must be positive");
  if (n > 14) throw cap_error("uniform_cover: n capped at 14");
  double m = std::ldexp(1.0, 1 - n);  // 2^(1-n)
  std::vector<MembershipDistribution> dists;
  dists.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::map<NodeSet, double> mass;
    for (std::uint64_t sub = 0; sub < (1ull << n); ++sub)
      if (sub >> i & 1) mass.emplace(NodeSet::from_mask(sub), m);
    dists.emplace_back(i, std::move(mass));
  }
  return FuzzyCover(std::move(dists));
}

FuzzyCover uniform_pairs_cover(int n) {
  if (n < 2) throw std::invalid_argument("uniform_pairs_cover: need at least 2 nodes");
  double m = 1.0 / (n - 1);
  std::vector<MembershipDistribution> dists;
  dists.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::map<NodeSet, double> mass;
    for (int j = 0; j < n; ++j)
      if (j != i) mass.emplace(NodeSet::of({i, j}), m);
    dists.emplace_back(i, std::move(mass));
  }
  return FuzzyCover(std::move(dists));
}

bool is_fuzzy_clustering(const FuzzyCover& q) {
  for (const auto& [a, entry] : q.support())
    if (static_cast<int>(entry.size()) != a.size()) return false;
  return true;
}

FuzzyCover saturate_pair(const ClusterScore& s, const FuzzyCover& q, const NodeSet& a) {
  if (s.n() != q.n()) throw std::invalid_argument("saturate_pair: size mismatch");
  std::vector<int> positive;
  for (int i : a.members())
    if (q.dist(i).mass_on(a) > 0.0) positive.push_back(i);
  if (positive.empty()) return q;  // nothing to redistribute
  if (positive.size() != 2 || static_cast<int>(positive.size()) == a.size())
    throw std::invalid_argument(
        "saturate_pair: supported only when exactly two members of a larger subset hold mass");

  int i = positive[0], j = positive[1];
  NodeSet pair = NodeSet::of({i, j});
  double qa_i = q.dist(i).mass_on(a), qa_j = q.dist(j).mass_on(a);
  double qp_i = q.dist(i).mass_on(pair), qp_j = q.dist(j).mass_on(pair);
  double root = std::sqrt(qp_i * qp_j + qa_i * qa_j);
  double single_i = qp_i + q.dist(i).mass_on(NodeSet::single(i)) + qa_i - root;
  double single_j = qp_j + q.dist(j).mass_on(NodeSet::single(j)) + qa_j - root;
  if (single_i < -value_tol || single_j < -value_tol)
    throw std::invalid_argument("saturate_pair: closed form would need negative singleton mass");

  std::vector<MembershipDistribution> dists(q.dists());
  auto rewrite = [&](int node, double single) {
    std::map<NodeSet, double> mass = q.dist(node).mass();
    mass.erase(a);
    mass[pair] = root;
    if (single > 0.0)
      mass[NodeSet::single(node)] = single;
    else
      mass.erase(NodeSet::single(node));
    dists[static_cast<std::size_t>(node)] = MembershipDistribution(node, std::move(mass));
  };
  rewrite(i, single_i);
  rewrite(j, single_j);
  return FuzzyCover(std::move(dists));
}

}  // namespace modnet

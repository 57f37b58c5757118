#pragma once

#include <map>
#include <vector>

#include "modnet/nodeset.hpp"
#include "modnet/partition.hpp"
#include "modnet/score.hpp"

namespace modnet {

/// Stored masses below this are pruned and the distribution renormalized.
inline constexpr double mass_prune_tol = 1e-12;

/// One node's unit membership mass spread over subsets containing it.
/// Every stored mass is positive, every key contains the node, and the
/// masses sum to 1 (within value_tol; loaders may pass a looser tolerance).
class MembershipDistribution {
public:
  MembershipDistribution(int node, std::map<NodeSet, double> mass,
                         double sum_tol = value_tol);

  int node() const { return node_; }
  const std::map<NodeSet, double>& mass() const { return mass_; }

  /// Mass on A, 0 when absent.
  double mass_on(const NodeSet& a) const {
    auto it = mass_.find(a);
    return it == mass_.end() ? 0.0 : it->second;
  }

  bool operator==(const MembershipDistribution& other) const {
    return node_ == other.node_ && mass_ == other.mass_;
  }

private:
  int node_;
  std::map<NodeSet, double> mass_;
};

/// Member masses of one support subset, ascending by node.
using SupportEntry = std::vector<std::pair<int, double>>;
using SupportMap = std::map<NodeSet, SupportEntry>;

/// An n-tuple of membership distributions, one per node; the search state.
/// Value type: mutation produces new covers.
class FuzzyCover {
public:
  explicit FuzzyCover(std::vector<MembershipDistribution> dists);

  int n() const { return static_cast<int>(dists_.size()); }
  const MembershipDistribution& dist(int i) const {
    return dists_.at(static_cast<std::size_t>(i));
  }
  const std::vector<MembershipDistribution>& dists() const { return dists_; }

  /// Subsets receiving positive mass, with their member masses.
  SupportMap support() const;

  bool operator==(const FuzzyCover& other) const { return dists_ == other.dists_; }

private:
  std::vector<MembershipDistribution> dists_;
};

/// Crisp cover of a partition: every node puts mass 1 on its block.
FuzzyCover partition_to_cover(const Partition& p);

/// Every node uniform over all 2^(n-1) subsets containing it; n capped at 14
/// (memory is n * 2^(n-1) entries).
FuzzyCover uniform_cover(int n);

/// Every node uniform over the n-1 pairs containing it; requires n >= 2.
/// Constrains the search to blocks no larger than pairs.
FuzzyCover uniform_pairs_cover(int n);

/// True when every support subset receives positive mass from all of its
/// members.
bool is_fuzzy_clustering(const FuzzyCover& q);

/// Collapses the mass two nodes hold on a larger subset A onto their pair
/// and singletons, preserving the objective: with {i,j} the positive-mass
/// members of A, the new pair masses are sqrt(q_i^ij q_j^ij + q_i^A q_j^A)
/// and the singletons absorb the remainder. A with no positive mass is a
/// no-op; any other support pattern is unsupported.
FuzzyCover saturate_pair(const ClusterScore& s, const FuzzyCover& q, const NodeSet& a);

}  // namespace modnet

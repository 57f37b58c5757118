#pragma once

#include <functional>
#include <map>

#include "modnet/nodeset.hpp"
#include "modnet/partition.hpp"

namespace modnet {

/// Moebius inversion of a set function given on all of 2^N (n <= 12):
/// mu(A) = v(A) - sum over proper subsets B of mu(B), so that
/// v(B) = sum over A subseteq B of mu(A). Requires v(empty) = 0.
std::map<NodeSet, double> mobius_inversion(int n, const std::function<double(const NodeSet&)>& v);

/// Moebius inversion of a partition function on the lattice of partitions of
/// {0..n-1} ordered by refinement (n <= 7):
/// mu(P) = V(P) - sum over strictly finer Q of mu(Q).
std::map<Partition, double> partition_mobius(int n,
                                             const std::function<double(const Partition&)>& v);

/// All partitions of {0..n-1} in restricted-growth-string order (n <= 12 is
/// the hard cap; sizes above 9 get large).
void for_each_partition(int n, const std::function<void(const std::vector<std::vector<int>>&)>& fn);

/// Materialized variant, capped at n <= 9.
std::vector<Partition> all_partitions(int n);

}  // namespace modnet

#pragma once

#include <vector>

#include "modnet/cover.hpp"
#include "modnet/score.hpp"

namespace modnet {

/// Multilinear extension at a point of the n-cube:
/// f(x) = sum_i x_i mu1_i + sum_{i<j} x_i x_j mu2_ij + triples likewise.
/// Coordinates must lie in [0,1]; f(chi_A) = v(A).
double mle_point(const ClusterScore& s, const std::vector<double>& x);

/// Global objective F(q): sum over support subsets A of f(q^A), where q^A
/// holds the masses A's members put on A.
double big_f(const ClusterScore& s, const FuzzyCover& q);

/// Pairwise route to the same value for quadratic scores:
/// sum_i v({i}) + sum_{i<j} mu2_ij * sum_{A containing both} q_i^A q_j^A.
double big_f_pairwise(const ClusterScore& s, const FuzzyCover& q);

/// Conditional score of i on A given everyone else's masses:
/// mu1_i + sum_{j in A\i} q_j^A mu2_ij + pair terms of A\i when cubic.
/// Requires i in A.
double conditional_score(const ClusterScore& s, const FuzzyCover& q, int i, const NodeSet& a);

/// Directional derivative of F when i's distribution moves from holding
/// nothing to a point mass on A; identical to conditional_score.
double derivative_iA(const ClusterScore& s, const FuzzyCover& q, int i, const NodeSet& a);

/// Mean of conditional_score over A's members; the greedy selection value.
double average_derivative(const ClusterScore& s, const FuzzyCover& q, const NodeSet& a);

// Entry-level forms shared with the parallel kernels: `entry` holds the
// (member, mass) pairs a support subset actually received, ascending.
double mle_on_entry(const ClusterScore& s, const SupportEntry& entry);
double conditional_on_entry(const ClusterScore& s, int i, const NodeSet& a,
                            const SupportEntry& entry);
double average_derivative_on_entry(const ClusterScore& s, const NodeSet& a,
                                   const SupportEntry& entry);

}  // namespace modnet

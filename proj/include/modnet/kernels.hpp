#pragma once

#include <cstdint>
#include <vector>

#include "modnet/cover.hpp"
#include "modnet/partition.hpp"
#include "modnet/score.hpp"

namespace modnet {

struct BruteForceResult {
  Partition partition;  // first maximizer in enumeration order
  double value;
  std::uint64_t near_tie_count;  // partitions scoring within tie_tol of the best
};

/// Candidate subset for an average-derivative scan.
struct ScanItem {
  const NodeSet* set;
  const SupportEntry* entry;
};

// ---------------------------------------------------------------------------
// OpenMP-parallel kernels. Results are deterministic and independent of the
// thread count: per-element kernels carry no reduction, sums use a fixed
// blocking, and the exact search merges per-prefix results in prefix order.
// ---------------------------------------------------------------------------
namespace kernels {

/// Sum of f(q^A) over support entries (the big-F inner loop).
double support_sum(const ClusterScore& s, const std::vector<const SupportEntry*>& entries);

/// Average derivative of every candidate.
std::vector<double> average_derivative_scan(const ClusterScore& s,
                                            const std::vector<ScanItem>& items);

/// Merge gains v(A u B) - v(A) - v(B) for all block pairs, flattened row-major
/// (entry i*k+j for i < j; other slots 0).
std::vector<double> pair_gains(const ClusterScore& s, const std::vector<NodeSet>& blocks);

/// Exact optimum by restricted-growth-string enumeration, parallel over
/// assignment prefixes; n capped at 12.
BruteForceResult brute_force(const ClusterScore& s, double tie_tol);

}  // namespace kernels

// ---------------------------------------------------------------------------
// Serial reference implementations, kept for tests and the benchmark.
// ---------------------------------------------------------------------------
namespace serial {

double support_sum(const ClusterScore& s, const std::vector<const SupportEntry*>& entries);
std::vector<double> average_derivative_scan(const ClusterScore& s,
                                            const std::vector<ScanItem>& items);
std::vector<double> pair_gains(const ClusterScore& s, const std::vector<NodeSet>& blocks);
BruteForceResult brute_force(const ClusterScore& s, double tie_tol);

}  // namespace serial

}  // namespace modnet

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modnet/cover.hpp"
#include "modnet/kernels.hpp"
#include "modnet/partition.hpp"
#include "modnet/rng.hpp"
#include "modnet/score.hpp"

namespace modnet {

enum class TraceAction { merge, fix_block, split };

const char* to_string(TraceAction a);

struct TraceStep {
  int t;
  TraceAction action;
  std::vector<NodeSet> sets;
  double value;  // objective after the step
};

struct SearchTrace {
  std::uint64_t seed = 0;
  std::vector<TraceStep> steps;
};

struct SearchResult {
  Partition partition;
  SearchTrace trace;
};

/// Subsets allowed to carry initial membership mass.
struct CandidateFamily {
  std::vector<NodeSet> subsets;  // deduplicated, canonical order

  static CandidateFamily of(std::vector<NodeSet> subsets);
  static CandidateFamily singletons(int n);
  static CandidateFamily all_pairs(int n);
  static CandidateFamily all_subsets(int n);  // capped at 16
};

/// Agglomerative baseline: repeatedly merge the two blocks whose union gains
/// the most, while some gain is strictly positive. Gains within value_tol of
/// the maximum are tied and resolved uniformly at random.
SearchResult greedy_merging(const ClusterScore& s, const Partition& start, std::uint64_t seed);
SearchResult greedy_merging(const ClusterScore& s, std::uint64_t seed);  // from singletons

/// Threshold initialization: node i spreads mass over the family subsets
/// containing it whose per-member score v(A)/|A| exceeds theta,
/// proportionally to that score (shifted positive when needed); nodes with
/// no surviving subset fall back to their singleton.
FuzzyCover init_threshold(const ClusterScore& s, const CandidateFamily& fam, double theta);

/// Fixes one block per iteration, the candidate support subset with maximal
/// average derivative (ties seeded-random); outside nodes re-proportion the
/// mass they held on subsets meeting the fixed block onto their surviving
/// support. A final check loop splits any block a single node could improve.
SearchResult greedy_clustering(const ClusterScore& s, const FuzzyCover& init, std::uint64_t seed);

/// True when no block can be improved by splitting off one node:
/// v(A) >= v(A\i) + v({i}) for every block and member.
bool is_local_optimum(const ClusterScore& s, const Partition& p);

/// Exact optimum over all partitions (n <= 12); ties resolved to the first
/// partition in enumeration order. near_tie_count counts partitions within
/// tie_tol of the optimum.
BruteForceResult brute_force_optimum(const ClusterScore& s, double tie_tol = value_tol);

}  // namespace modnet

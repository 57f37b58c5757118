#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modnet/cover.hpp"
#include "modnet/score.hpp"
#include "modnet/search.hpp"

namespace modnet {

struct FamilyEntry {
  double value;           // v(A) under the family's score
  std::vector<int> runs;  // runs that output A as a block, ascending
};

/// Union of the blocks of several runs, weighted by cluster score. Entries
/// may overlap; that is the point.
struct WeightedFamily {
  std::string score_label;
  std::map<NodeSet, FamilyEntry> entries;
};

inline constexpr int omega_default_max_members = 10000;

/// Runs greedy_clustering once per init (seed = base_seed + run index, runs
/// may execute concurrently) and unions the output blocks.
WeightedFamily multi_run(const ClusterScore& s, const std::vector<FuzzyCover>& inits,
                         std::uint64_t base_seed);

/// The set system of all unions of at least one family member, generated
/// smallest-first and truncated to unions of size <= max_size and at most
/// max_members results.
std::vector<NodeSet> omega(const WeightedFamily& f, int max_size, int max_members);

enum class LargeInitMode { uniform, score_weighted };

/// Initial cover concentrated on the large unions of family members: node i
/// spreads mass over {B in omega(F): i in B, |B| > vartheta}, uniformly or
/// proportionally to the (positivity-shifted) score; nodes with no
/// qualifying union fall back to their singleton.
FuzzyCover large_module_init(const ClusterScore& s, const WeightedFamily& f, int vartheta,
                             LargeInitMode mode, int omega_max_size,
                             int omega_max_members = omega_default_max_members);

struct TwoStageOptions {
  double theta = 0.0;                               // stage-1 init threshold
  int vartheta = 2;                                 // stage-2 size threshold
  int runs = 8;                                     // runs per stage
  LargeInitMode mode = LargeInitMode::uniform;      // stage-2 mass spread
  int omega_max_size = 0;                           // 0 = n
  int omega_max_members = omega_default_max_members;
};

/// Small modules first, then large ones: stage 1 multi-runs the threshold
/// init over small_fam (each run's masses jittered from its seed), stage 2
/// multi-runs the large-module init over the unions of the stage-1 family.
/// Returns the merged family; stage-2 runs are numbered after stage 1.
WeightedFamily two_stage(const ClusterScore& s, const CandidateFamily& small_fam,
                         const TwoStageOptions& opt, std::uint64_t base_seed);

}  // namespace modnet

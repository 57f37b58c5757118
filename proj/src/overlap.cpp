#include "modnet/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "modnet/rng.hpp"

namespace modnet {

WeightedFamily multi_run(const ClusterScore& s, const std::vector<FuzzyCover>& inits,
                         std::uint64_t base_seed) {
  if (inits.empty()) throw std::invalid_argument("multi_run: no initial covers");
  std::vector<Partition> outputs(inits.size(), Partition::whole(1));
#pragma omp parallel for schedule(dynamic)
  for (long long r = 0; r < static_cast<long long>(inits.size()); ++r)
    outputs[static_cast<std::size_t>(r)] =
        greedy_clustering(s, inits[static_cast<std::size_t>(r)],
                          base_seed + static_cast<std::uint64_t>(r))
            .partition;

  WeightedFamily fam;
  fam.score_label = s.label();
  for (std::size_t r = 0; r < outputs.size(); ++r)
    for (const NodeSet& a : outputs[r].blocks()) {
      auto [it, fresh] = fam.entries.try_emplace(a, FamilyEntry{s.eval_set(a), {}});
      it->second.runs.push_back(static_cast<int>(r));
    }
  return fam;
}

std::vector<NodeSet> omega(const WeightedFamily& f, int max_size, int max_members) {
  if (f.entries.empty()) throw std::invalid_argument("omega: empty family");
  std::vector<NodeSet> members;
  members.reserve(f.entries.size());
  for (const auto& [a, e] : f.entries) members.push_back(a);

  // smallest unions first so the caps keep the useful part of the closure
  auto keyed = [](const NodeSet& a) { return std::make_pair(a.size(), a); };
  std::set<std::pair<int, NodeSet>> queue;
  std::set<NodeSet> seen;
  for (const NodeSet& a : members)
    if (a.size() <= max_size && seen.insert(a).second) queue.insert(keyed(a));

  std::vector<NodeSet> out;
  while (!queue.empty() && static_cast<int>(out.size()) < max_members) {
    NodeSet cur = queue.begin()->second;
    queue.erase(queue.begin());
    out.push_back(cur);
    for (const NodeSet& m : members) {
      NodeSet u = cur.set_union(m);
      if (u.size() <= max_size && seen.insert(u).second) queue.insert(keyed(u));
    }
  }
  return out;
}

FuzzyCover large_module_init(const ClusterScore& s, const WeightedFamily& f, int vartheta,
                             LargeInitMode mode, int omega_max_size, int omega_max_members) {
  if (vartheta < 0) throw std::invalid_argument("large_module_init: vartheta must be >= 0");
  int n = s.n();
  if (omega_max_size <= 0) omega_max_size = n;
  std::vector<NodeSet> unions = omega(f, omega_max_size, omega_max_members);
  std::erase_if(unions, [&](const NodeSet& b) { return b.size() <= vartheta; });

  std::vector<MembershipDistribution> dists;
  dists.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<const NodeSet*> mine;
    for (const NodeSet& b : unions)
      if (b.contains(i)) mine.push_back(&b);
    if (mine.empty()) {
      dists.emplace_back(i, std::map<NodeSet, double>{{NodeSet::single(i), 1.0}});
      continue;
    }
    std::map<NodeSet, double> mass;
    if (mode == LargeInitMode::uniform) {
      double m = 1.0 / static_cast<double>(mine.size());
      for (const NodeSet* b : mine) mass.emplace(*b, m);
    } else {
      std::vector<double> w(mine.size());
      double lo = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < mine.size(); ++k) {
        w[k] = s.eval_set(*mine[k]);
        lo = std::min(lo, w[k]);
      }
      double shift = lo <= 0.0 ? -lo + 1e-9 : 0.0;
      double wsum = 0.0;
      for (double x : w) wsum += x + shift;
      for (std::size_t k = 0; k < mine.size(); ++k)
        mass.emplace(*mine[k], (w[k] + shift) / wsum);
    }
    dists.emplace_back(i, std::move(mass));
  }
  return FuzzyCover(std::move(dists));
}

namespace {

// multiply every mass by exp(u), u uniform in [-0.1, 0.1], and renormalize
FuzzyCover jitter_cover(const FuzzyCover& base, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<MembershipDistribution> dists;
  dists.reserve(static_cast<std::size_t>(base.n()));
  for (int i = 0; i < base.n(); ++i) {
    std::map<NodeSet, double> mass = base.dist(i).mass();
    double sum = 0.0;
    for (auto& [a, m] : mass) {
      m *= std::exp(rng.uniform(-0.1, 0.1));
      sum += m;
    }
    for (auto& [a, m] : mass) m /= sum;
    dists.emplace_back(i, std::move(mass));
  }
  return FuzzyCover(std::move(dists));
}

void merge_family(WeightedFamily& into, const WeightedFamily& from, int run_offset) {
  for (const auto& [a, e] : from.entries) {
    auto [it, fresh] = into.entries.try_emplace(a, FamilyEntry{e.value, {}});
    for (int r : e.runs) it->second.runs.push_back(r + run_offset);
  }
}

}  // namespace

WeightedFamily two_stage(const ClusterScore& s, const CandidateFamily& small_fam,
                         const TwoStageOptions& opt, std::uint64_t base_seed) {
  if (opt.runs < 1) throw std::invalid_argument("two_stage: runs must be >= 1");
  if (opt.vartheta < 0) throw std::invalid_argument("two_stage: vartheta must be >= 0");

  FuzzyCover small_init = init_threshold(s, small_fam, opt.theta);
  std::vector<FuzzyCover> stage1;
  stage1.reserve(static_cast<std::size_t>(opt.runs));
  for (int r = 0; r < opt.runs; ++r)
    stage1.push_back(jitter_cover(small_init, base_seed + static_cast<std::uint64_t>(r)));
  WeightedFamily fam1 = multi_run(s, stage1, base_seed);

  FuzzyCover large_init = large_module_init(s, fam1, opt.vartheta, opt.mode,
                                            opt.omega_max_size, opt.omega_max_members);
  std::vector<FuzzyCover> stage2(static_cast<std::size_t>(opt.runs), large_init);
  WeightedFamily fam2 =
      multi_run(s, stage2, base_seed + static_cast<std::uint64_t>(opt.runs));

  WeightedFamily merged;
  merged.score_label = s.label();
  merge_family(merged, fam1, 0);
  merge_family(merged, fam2, opt.runs);
  return merged;
}

}  // namespace modnet

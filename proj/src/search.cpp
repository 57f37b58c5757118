#include "modnet/search.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "modnet/errors.hpp"
#include "modnet/mle.hpp"

namespace modnet {

const char* to_string(TraceAction a) {
  switch (a) {
    case TraceAction::merge: return "merge";
    case TraceAction::fix_block: return "fix-block";
    case TraceAction::split: return "split";
  }
  return "?";
}

CandidateFamily CandidateFamily::of(std::vector<NodeSet> subsets) {
  std::sort(subsets.begin(), subsets.end());
  subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
  std::erase_if(subsets, [](const NodeSet& a) { return a.empty(); });
  return CandidateFamily{std::move(subsets)};
}

CandidateFamily CandidateFamily::singletons(int n) {
  std::vector<NodeSet> subs;
  for (int i = 0; i < n; ++i) subs.push_back(NodeSet::single(i));
  return of(std::move(subs));
}

CandidateFamily CandidateFamily::all_pairs(int n) {
  std::vector<NodeSet> subs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) subs.push_back(NodeSet::of({i, j}));
  return of(std::move(subs));
}

CandidateFamily CandidateFamily::all_subsets(int n) {
  if (n > 16) throw cap_error("all_subsets: n capped at 16");
  std::vector<NodeSet> subs;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask)
    subs.push_back(NodeSet::from_mask(mask));
  return of(std::move(subs));
}

// ---------------------------------------------------------------------------
// GreedyMerging
// ---------------------------------------------------------------------------

SearchResult greedy_merging(const ClusterScore& s, const Partition& start, std::uint64_t seed) {
  if (start.n() != s.n()) throw std::invalid_argument("greedy_merging: size mismatch");
  Rng rng(seed);
  SearchTrace trace;
  trace.seed = seed;
  std::vector<NodeSet> blocks = start.blocks();
  double value = s.eval_partition(start);
  int t = 0;

  while (blocks.size() >= 2) {
    std::size_t k = blocks.size();
    std::vector<double> gains = kernels::pair_gains(s, blocks);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) best = std::max(best, gains[i * k + j]);
    if (!(best > 0.0)) break;

    std::vector<std::pair<std::size_t, std::size_t>> ties;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (gains[i * k + j] > 0.0 && gains[i * k + j] >= best - value_tol) ties.emplace_back(i, j);
    auto [bi, bj] = ties[rng.index(ties.size())];

    NodeSet a = blocks[bi], b = blocks[bj];
    value += gains[bi * k + bj];
    blocks[bi] = a.set_union(b);
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(bj));
    std::sort(blocks.begin(), blocks.end(),
              [](const NodeSet& x, const NodeSet& y) { return x.front() < y.front(); });
    trace.steps.push_back({++t, TraceAction::merge, {a, b}, value});
  }
  return SearchResult{Partition(s.n(), std::move(blocks)), std::move(trace)};
}

SearchResult greedy_merging(const ClusterScore& s, std::uint64_t seed) {
  return greedy_merging(s, Partition::singletons(s.n()), seed);
}

// ---------------------------------------------------------------------------
// Threshold initialization
// ---------------------------------------------------------------------------

FuzzyCover init_threshold(const ClusterScore& s, const CandidateFamily& fam, double theta) {
  int n = s.n();
  std::vector<std::pair<NodeSet, double>> scored;  // (subset, v(A)/|A|)
  scored.reserve(fam.subsets.size());
  for (const NodeSet& a : fam.subsets)
    scored.emplace_back(a, s.eval_set(a) / a.size());

  std::vector<MembershipDistribution> dists;
  dists.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<const std::pair<NodeSet, double>*> alive;
    for (const auto& sv : scored)
      if (sv.first.contains(i) && sv.second > theta) alive.push_back(&sv);
    if (alive.empty()) {
      dists.emplace_back(i, std::map<NodeSet, double>{{NodeSet::single(i), 1.0}});
      continue;
    }
    double lo = std::numeric_limits<double>::infinity();
    for (const auto* sv : alive) lo = std::min(lo, sv->second);
    double shift = lo <= 0.0 ? -lo + 1e-9 : 0.0;
    double wsum = 0.0;
    for (const auto* sv : alive) wsum += sv->second + shift;
    std::map<NodeSet, double> mass;
    for (const auto* sv : alive) mass[sv->first] = (sv->second + shift) / wsum;
    dists.emplace_back(i, std::move(mass));
  }
  return FuzzyCover(std::move(dists));
}

// ---------------------------------------------------------------------------
// GreedyClustering
// ---------------------------------------------------------------------------

namespace {

void normalize(std::map<NodeSet, double>& mass) {
  std::erase_if(mass, [](const auto& kv) { return kv.second < mass_prune_tol; });
  double sum = 0.0;
  for (const auto& [a, m] : mass) sum += m;
  if (sum > 0.0 && sum != 1.0)
    for (auto& [a, m] : mass) m /= sum;
}

FuzzyCover state_to_cover(const std::vector<std::map<NodeSet, double>>& mass) {
  std::vector<MembershipDistribution> dists;
  dists.reserve(mass.size());
  for (std::size_t i = 0; i < mass.size(); ++i)
    dists.emplace_back(static_cast<int>(i), mass[i]);
  return FuzzyCover(std::move(dists));
}

}  // namespace

SearchResult greedy_clustering(const ClusterScore& s, const FuzzyCover& init, std::uint64_t seed) {
  int n = s.n();
  if (init.n() != n) throw std::invalid_argument("greedy_clustering: size mismatch");
  Rng rng(seed);
  SearchTrace trace;
  trace.seed = seed;
  int t = 0;

  std::vector<std::map<NodeSet, double>> mass(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) mass[static_cast<std::size_t>(i)] = init.dist(i).mass();

  // per-member score of a subset, cached across iterations
  std::map<NodeSet, double> vhat_cache;
  auto vhat = [&](const NodeSet& a) {
    auto it = vhat_cache.find(a);
    if (it == vhat_cache.end())
      it = vhat_cache.emplace(a, s.eval_set(a) / a.size()).first;
    return it->second;
  };

  for (;;) {
    SupportMap sup;
    for (int i = 0; i < n; ++i)
      for (const auto& [a, m] : mass[static_cast<std::size_t>(i)]) sup[a].emplace_back(i, m);

    // candidates: support subsets neither empty nor crisp
    std::vector<ScanItem> items;
    for (const auto& [a, entry] : sup) {
      double group = 0.0;
      for (const auto& [i, m] : entry) group += m;
      if (group > value_tol && group < a.size() - value_tol) items.push_back({&a, &entry});
    }
    if (items.empty()) break;

    std::vector<double> values = kernels::average_derivative_scan(s, items);
    double best = *std::max_element(values.begin(), values.end());
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] >= best - value_tol) ties.push_back(i);
    NodeSet astar = *items[ties[rng.index(ties.size())]].set;
    ++t;

    // fix the block: its members put mass 1 on it
    astar.for_each([&](int i) {
      auto& mi = mass[static_cast<std::size_t>(i)];
      mi.clear();
      mi.emplace(astar, 1.0);
    });

    // outside nodes re-proportion mass held on subsets meeting the block
    for (int j = 0; j < n; ++j) {
      if (astar.contains(j)) continue;
      auto& mj = mass[static_cast<std::size_t>(j)];
      double moved = 0.0;
      for (auto it = mj.begin(); it != mj.end();) {
        if (it->first.intersects(astar)) {
          moved += it->second;
          it = mj.erase(it);
        } else {
          ++it;
        }
      }
      if (moved == 0.0) continue;
      if (mj.empty()) {
        // whole support met the block; fall back to the singleton
        mj.emplace(NodeSet::single(j), 1.0);
        continue;
      }
      double lo = std::numeric_limits<double>::infinity();
      for (const auto& [b, m] : mj) lo = std::min(lo, vhat(b));
      double shift = lo <= 0.0 ? -lo + 1e-9 : 0.0;
      double wsum = 0.0;
      for (const auto& [b, m] : mj) wsum += vhat(b) + shift;
      for (auto& [b, m] : mj) m += (vhat(b) + shift) * moved / wsum;
      normalize(mj);
    }

    trace.steps.push_back({t, TraceAction::fix_block, {astar},
                           big_f(s, state_to_cover(mass))});
  }

  // crisp support subsets become blocks; uncovered nodes become singletons
  SupportMap sup;
  for (int i = 0; i < n; ++i)
    for (const auto& [a, m] : mass[static_cast<std::size_t>(i)]) sup[a].emplace_back(i, m);
  std::vector<NodeSet> blocks;
  NodeSet covered;
  for (const auto& [a, entry] : sup) {
    double group = 0.0;
    for (const auto& [i, m] : entry) group += m;
    if (group >= a.size() - value_tol) {
      blocks.push_back(a);
      covered = covered.set_union(a);
    }
  }
  for (int i = 0; i < n; ++i)
    if (!covered.contains(i)) blocks.push_back(NodeSet::single(i));
  Partition p(n, std::move(blocks));

  // check loop: split any block a single node improves
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t b = 0; b < p.blocks().size() && !changed; ++b) {
      const NodeSet& a = p.blocks()[b];
      if (a.size() < 2) continue;
      double va = s.eval_set(a);
      for (int i : a.members()) {
        NodeSet rest = a;
        rest.remove(i);
        if (va < s.singleton_value(i) + s.eval_set(rest)) {
          std::vector<NodeSet> nb = p.blocks();
          nb.erase(nb.begin() + static_cast<std::ptrdiff_t>(b));
          nb.push_back(NodeSet::single(i));
          nb.push_back(rest);
          p = Partition(n, std::move(nb));
          ++t;
          NodeSet single = NodeSet::single(i);
          std::vector<NodeSet> pieces =
              single < rest ? std::vector<NodeSet>{single, rest}
                            : std::vector<NodeSet>{rest, single};
          trace.steps.push_back({t, TraceAction::split, pieces, s.eval_partition(p)});
          changed = true;
          break;
        }
      }
    }
  }
  return SearchResult{std::move(p), std::move(trace)};
}

bool is_local_optimum(const ClusterScore& s, const Partition& p) {
  for (const NodeSet& a : p.blocks()) {
    if (a.size() < 2) continue;
    double va = s.eval_set(a);
    for (int i : a.members()) {
      NodeSet rest = a;
      rest.remove(i);
      if (va < s.singleton_value(i) + s.eval_set(rest)) return false;
    }
  }
  return true;
}

BruteForceResult brute_force_optimum(const ClusterScore& s, double tie_tol) {
  return kernels::brute_force(s, tie_tol);
}

}  // namespace modnet

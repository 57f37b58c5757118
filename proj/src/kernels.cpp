#include "modnet/kernels.hpp"

#include <algorithm>
#include <limits>

#include "modnet/errors.hpp"
#include "modnet/mle.hpp"
#include "modnet/mobius.hpp"

namespace modnet {

namespace {

constexpr std::size_t sum_block = 64;  // fixed blocking keeps sums thread-count independent

double gain_between(const ClusterScore& s, const std::vector<int>& a, const std::vector<int>& b) {
  double g = 0.0;
  for (int i : a)
    for (int j : b) g += s.mu2(i, j);
  if (s.degree() == 3) {
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = x + 1; y < a.size(); ++y)
        for (int j : b) g += s.mu3(a[x], a[y], j);
    for (std::size_t x = 0; x < b.size(); ++x)
      for (std::size_t y = x + 1; y < b.size(); ++y)
        for (int i : a) g += s.mu3(b[x], b[y], i);
  }
  return g;
}

// Dense coefficient tables plus incremental recursion shared by the exact
// search. Assigning node k to a block adds mu1[k], the pair terms against
// the block, and (when cubic) the triple terms against block pairs.
struct DenseScore {
  int n;
  bool cubic;
  std::vector<double> mu1, mu2, mu3;

  explicit DenseScore(const ClusterScore& s) : n(s.n()), cubic(s.degree() == 3) {
    mu1 = s.mu1_all();
    mu2.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) mu2[static_cast<std::size_t>(i) * n + j] = s.mu2(i, j);
    if (cubic) {
      mu3.assign(static_cast<std::size_t>(n) * n * n, 0.0);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k)
            mu3[(static_cast<std::size_t>(i) * n + j) * n + k] = s.mu3(i, j, k);
    }
  }

  double delta(const std::vector<int>& block, int k) const {
    double d = mu1[static_cast<std::size_t>(k)];
    for (int j : block) d += mu2[static_cast<std::size_t>(j) * n + k];
    if (cubic)
      for (std::size_t x = 0; x < block.size(); ++x)
        for (std::size_t y = x + 1; y < block.size(); ++y)
          d += mu3[(static_cast<std::size_t>(block[x]) * n + block[y]) * n + k];
    return d;
  }
};

template <typename Leaf>
void complete(const DenseScore& ds, std::vector<std::vector<int>>& blocks, double value, int k,
              Leaf&& leaf) {
  if (k == ds.n) {
    leaf(blocks, value);
    return;
  }
  for (std::size_t b = 0; b <= blocks.size(); ++b) {
    if (b == blocks.size()) blocks.emplace_back();
    double d = ds.delta(blocks[b], k);
    blocks[b].push_back(k);
    complete(ds, blocks, value + d, k + 1, leaf);
    blocks[b].pop_back();
    if (blocks.back().empty()) blocks.pop_back();
  }
}

void collect_prefixes(int depth, int k, std::vector<int>& a, int used,
                      std::vector<std::vector<int>>& out) {
  if (k == depth) {
    out.push_back(a);
    return;
  }
  for (int b = 0; b <= used; ++b) {
    a[static_cast<std::size_t>(k)] = b;
    collect_prefixes(depth, k + 1, a, std::max(used, b + 1), out);
  }
}

Partition partition_from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<NodeSet> sets;
  sets.reserve(blocks.size());
  for (const auto& b : blocks) sets.push_back(NodeSet::from_members(b));
  return Partition(n, std::move(sets));
}

struct PrefixBest {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<std::vector<int>> blocks;
};

}  // namespace

namespace kernels {

double support_sum(const ClusterScore& s, const std::vector<const SupportEntry*>& entries) {
  std::size_t nblocks = (entries.size() + sum_block - 1) / sum_block;
  std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(static)
  for (long long bi = 0; bi < static_cast<long long>(nblocks); ++bi) {
    std::size_t lo = static_cast<std::size_t>(bi) * sum_block;
    std::size_t hi = std::min(lo + sum_block, entries.size());
    double acc = 0.0;
    for (std::size_t e = lo; e < hi; ++e) acc += mle_on_entry(s, *entries[e]);
    partial[static_cast<std::size_t>(bi)] = acc;
  }
  double sum = 0.0;
  for (double p : partial) sum += p;
  return sum;
}

std::vector<double> average_derivative_scan(const ClusterScore& s,
                                            const std::vector<ScanItem>& items) {
  std::vector<double> values(items.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < static_cast<long long>(items.size()); ++i)
    values[static_cast<std::size_t>(i)] =
        average_derivative_on_entry(s, *items[static_cast<std::size_t>(i)].set,
                                    *items[static_cast<std::size_t>(i)].entry);
  return values;
}

std::vector<double> pair_gains(const ClusterScore& s, const std::vector<NodeSet>& blocks) {
  std::size_t k = blocks.size();
  std::vector<std::vector<int>> members(k);
  for (std::size_t i = 0; i < k; ++i) members[i] = blocks[i].members();
  std::vector<double> gains(k * k, 0.0);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long flat = 0; flat < static_cast<long long>(k * k); ++flat) {
    std::size_t i = static_cast<std::size_t>(flat) / k;
    std::size_t j = static_cast<std::size_t>(flat) % k;
    if (i < j) gains[static_cast<std::size_t>(flat)] = gain_between(s, members[i], members[j]);
  }
  return gains;
}

BruteForceResult brute_force(const ClusterScore& s, double tie_tol) {
  int n = s.n();
  if (n <= 0) throw std::invalid_argument("brute_force: empty score");
  if (n > 12) throw cap_error("brute_force: n capped at 12 (Bell numbers explode)");
  DenseScore ds(s);

  int depth = std::min(n, 7);
  std::vector<std::vector<int>> prefixes;
  {
    std::vector<int> a(static_cast<std::size_t>(depth));
    collect_prefixes(depth, 0, a, 0, prefixes);
  }

  std::vector<PrefixBest> best(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (long long pi = 0; pi < static_cast<long long>(prefixes.size()); ++pi) {
    const std::vector<int>& a = prefixes[static_cast<std::size_t>(pi)];
    std::vector<std::vector<int>> blocks;
    double value = 0.0;
    for (int k = 0; k < depth; ++k) {
      std::size_t b = static_cast<std::size_t>(a[static_cast<std::size_t>(k)]);
      if (b == blocks.size()) blocks.emplace_back();
      value += ds.delta(blocks[b], k);
      blocks[b].push_back(k);
    }
    PrefixBest& pb = best[static_cast<std::size_t>(pi)];
    complete(ds, blocks, value, depth,
             [&](const std::vector<std::vector<int>>& full, double v) {
               if (v > pb.value) {
                 pb.value = v;
                 pb.blocks = full;
               }
             });
  }

  std::size_t winner = 0;
  for (std::size_t pi = 1; pi < best.size(); ++pi)
    if (best[pi].value > best[winner].value) winner = pi;
  double best_value = best[winner].value;

  double threshold = best_value - tie_tol;
  std::vector<std::uint64_t> counts(prefixes.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (long long pi = 0; pi < static_cast<long long>(prefixes.size()); ++pi) {
    const std::vector<int>& a = prefixes[static_cast<std::size_t>(pi)];
    std::vector<std::vector<int>> blocks;
    double value = 0.0;
    for (int k = 0; k < depth; ++k) {
      std::size_t b = static_cast<std::size_t>(a[static_cast<std::size_t>(k)]);
      if (b == blocks.size()) blocks.emplace_back();
      value += ds.delta(blocks[b], k);
      blocks[b].push_back(k);
    }
    std::uint64_t local = 0;
    complete(ds, blocks, value, depth,
             [&](const std::vector<std::vector<int>>&, double v) {
               if (v >= threshold) ++local;
             });
    counts[static_cast<std::size_t>(pi)] = local;
  }
  std::uint64_t ties = 0;
  for (std::uint64_t c : counts) ties += c;

  Partition p = partition_from_blocks(n, best[winner].blocks);
  return BruteForceResult{p, s.eval_partition(p), ties};
}

}  // namespace kernels

namespace serial {

double support_sum(const ClusterScore& s, const std::vector<const SupportEntry*>& entries) {
  double sum = 0.0;
  for (const SupportEntry* e : entries) sum += mle_on_entry(s, *e);
  return sum;
}

std::vector<double> average_derivative_scan(const ClusterScore& s,
                                            const std::vector<ScanItem>& items) {
  std::vector<double> values(items.size());
  for (std::size_t i = 0; i < items.size(); ++i)
    values[i] = average_derivative_on_entry(s, *items[i].set, *items[i].entry);
  return values;
}

std::vector<double> pair_gains(const ClusterScore& s, const std::vector<NodeSet>& blocks) {
  std::size_t k = blocks.size();
  std::vector<std::vector<int>> members(k);
  for (std::size_t i = 0; i < k; ++i) members[i] = blocks[i].members();
  std::vector<double> gains(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) gains[i * k + j] = gain_between(s, members[i], members[j]);
  return gains;
}

BruteForceResult brute_force(const ClusterScore& s, double tie_tol) {
  int n = s.n();
  if (n <= 0) throw std::invalid_argument("brute_force: empty score");
  if (n > 12) throw cap_error("brute_force: n capped at 12");
  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<std::vector<int>> best_blocks;
  for_each_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
    double v = 0.0;
    for (const auto& b : blocks) v += s.eval_set(NodeSet::from_members(b));
    if (v > best_value) {
      best_value = v;
      best_blocks = blocks;
    }
  });
  std::uint64_t ties = 0;
  for_each_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
    double v = 0.0;
    for (const auto& b : blocks) v += s.eval_set(NodeSet::from_members(b));
    if (v >= best_value - tie_tol) ++ties;
  });
  Partition p = partition_from_blocks(n, best_blocks);
  return BruteForceResult{p, s.eval_partition(p), ties};
}

}  // namespace serial

}  // namespace modnet

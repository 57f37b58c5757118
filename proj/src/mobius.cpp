#include "modnet/mobius.hpp"

#include <algorithm>
#include <stdexcept>

#include "modnet/errors.hpp"

namespace modnet {

std::map<NodeSet, double> mobius_inversion(int n,
                                           const std::function<double(const NodeSet&)>& v) {
  if (n < 0 || n > 12) throw cap_error("mobius_inversion: n capped at 12");
  std::size_t size = 1ull << n;
  std::vector<double> mu(size);
  for (std::size_t mask = 0; mask < size; ++mask)
    mu[mask] = v(NodeSet::from_mask(mask));
  if (mu[0] != 0.0) throw std::invalid_argument("mobius_inversion: v(empty) must be 0");
  // in-place subset Moebius transform
  for (int b = 0; b < n; ++b)
    for (std::size_t mask = 0; mask < size; ++mask)
      if (mask >> b & 1) mu[mask] -= mu[mask ^ (1ull << b)];
  std::map<NodeSet, double> out;
  for (std::size_t mask = 0; mask < size; ++mask)
    out.emplace(NodeSet::from_mask(mask), mu[mask]);
  return out;
}

std::map<Partition, double> partition_mobius(int n,
                                             const std::function<double(const Partition&)>& v) {
  if (n <= 0 || n > 7) throw cap_error("partition_mobius: n capped at 7");
  std::vector<Partition> parts = all_partitions(n);
  // finer partitions have strictly more blocks; process coarse-ward
  std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<double> mu(parts.size());
  std::map<Partition, double> out;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    double m = v(parts[p]);
    for (std::size_t q = 0; q < p; ++q)
      if (parts[q].size() > parts[p].size() && parts[q].refines(parts[p])) m -= mu[q];
    mu[p] = m;
    out.emplace(parts[p], m);
  }
  return out;
}

namespace {

void enumerate_rgs(int n, int k, std::vector<std::vector<int>>& blocks,
                   const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  if (k == n) {
    fn(blocks);
    return;
  }
  for (std::size_t b = 0; b <= blocks.size(); ++b) {
    if (b == blocks.size()) blocks.emplace_back();
    blocks[b].push_back(k);
    enumerate_rgs(n, k + 1, blocks, fn);
    blocks[b].pop_back();
    if (blocks.back().empty()) blocks.pop_back();
  }
}

}  // namespace

void for_each_partition(int n,
                        const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  if (n <= 0 || n > 12) throw cap_error("for_each_partition: n capped at 12");
  std::vector<std::vector<int>> blocks;
  enumerate_rgs(n, 0, blocks, fn);
}

std::vector<Partition> all_partitions(int n) {
  if (n <= 0 || n > 9) throw cap_error("all_partitions: n capped at 9");
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
    std::vector<NodeSet> sets;
    sets.reserve(blocks.size());
    for (const auto& b : blocks) sets.push_back(NodeSet::from_members(b));
    out.emplace_back(n, std::move(sets));
  });
  return out;
}

}  // namespace modnet

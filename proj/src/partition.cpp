#include "modnet/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace modnet {

Partition::Partition(int n, std::vector<NodeSet> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n <= 0) throw std::invalid_argument("partition: n must be positive");
  NodeSet seen;
  int covered = 0;
  for (const NodeSet& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition: empty block");
    if (b.back() >= n) throw std::invalid_argument("partition: member out of range");
    if (seen.intersects(b)) throw std::invalid_argument("partition: blocks overlap");
    seen = seen.set_union(b);
    covered += b.size();
  }
  if (covered != n) throw std::invalid_argument("partition: blocks do not cover 0..n-1");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const NodeSet& a, const NodeSet& b) { return a.front() < b.front(); });
}

Partition Partition::singletons(int n) {
  std::vector<NodeSet> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) blocks.push_back(NodeSet::single(i));
  return Partition(n, std::move(blocks));
}

Partition Partition::whole(int n) {
  std::vector<NodeSet> blocks{NodeSet::full(n)};
  return Partition(n, std::move(blocks));
}

int Partition::block_of(int i) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (blocks_[b].contains(i)) return static_cast<int>(b);
  throw std::out_of_range("partition: node out of range");
}

bool Partition::refines(const Partition& coarser) const {
  if (n_ != coarser.n_) return false;
  for (const NodeSet& b : blocks_) {
    bool inside = false;
    for (const NodeSet& a : coarser.blocks_) {
      if (a.contains_all(b)) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

bool Partition::operator<(const Partition& other) const {
  return blocks_ < other.blocks_;
}

std::string Partition::to_string() const {
  std::string s;
  for (const NodeSet& b : blocks_) s += b.to_string();
  return s;
}

}  // namespace modnet

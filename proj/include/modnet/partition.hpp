#pragma once

#include <vector>

#include "modnet/nodeset.hpp"

namespace modnet {

/// Partition of {0..n-1} into nonempty pairwise-disjoint blocks. Blocks are
/// kept in canonical order (ascending smallest member).
class Partition {
public:
  /// Validates disjointness and coverage; canonicalizes block order.
  Partition(int n, std::vector<NodeSet> blocks);

  static Partition singletons(int n);  // finest partition
  static Partition whole(int n);       // coarsest partition

  int n() const { return n_; }
  const std::vector<NodeSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  /// Index of the block containing node i.
  int block_of(int i) const;

  /// True when every block of *this is contained in some block of coarser.
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition& other) const {
    return n_ == other.n_ && blocks_ == other.blocks_;
  }
  bool operator<(const Partition& other) const;

  std::string to_string() const;

private:
  int n_ = 0;
  std::vector<NodeSet> blocks_;
};

}  // namespace modnet

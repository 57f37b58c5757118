#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace modnet {

/// Set of node indices with bitset semantics. Members iterate in ascending
/// order. operator< is lexicographic on the ascending member list, so
/// disjoint sets sort by their smallest member.
class NodeSet {
public:
  NodeSet() = default;

  static NodeSet single(int i) {
    NodeSet s;
    s.add(i);
    return s;
  }

  static NodeSet full(int n) {
    NodeSet s;
    if (n <= 0) return s;
    s.words_.assign(static_cast<std::size_t>((n + 63) / 64), ~0ull);
    int spare = static_cast<int>(s.words_.size()) * 64 - n;
    if (spare > 0) s.words_.back() >>= spare;
    return s;
  }

  static NodeSet of(std::initializer_list<int> members) {
    NodeSet s;
    for (int i : members) s.add(i);
    return s;
  }

  static NodeSet from_members(const std::vector<int>& members) {
    NodeSet s;
    for (int i : members) s.add(i);
    return s;
  }

  /// Bits 0..63 of `mask` become members 0..63.
  static NodeSet from_mask(std::uint64_t mask) {
    NodeSet s;
    if (mask) s.words_.push_back(mask);
    return s;
  }

  void add(int i) {
    check_index(i);
    std::size_t w = static_cast<std::size_t>(i) / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= 1ull << (i % 64);
  }

  void remove(int i) {
    check_index(i);
    std::size_t w = static_cast<std::size_t>(i) / 64;
    if (w < words_.size()) {
      words_[w] &= ~(1ull << (i % 64));
      trim();
    }
  }

  bool contains(int i) const {
    if (i < 0) return false;
    std::size_t w = static_cast<std::size_t>(i) / 64;
    return w < words_.size() && (words_[w] >> (i % 64) & 1);
  }

  int size() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const { return words_.empty(); }

  /// Smallest member, -1 when empty.
  int front() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
  }

  /// Largest member, -1 when empty.
  int back() const {
    for (std::size_t w = words_.size(); w-- > 0;)
      if (words_[w]) return static_cast<int>(w * 64 + 63 - std::countl_zero(words_[w]));
    return -1;
  }

  bool contains_all(const NodeSet& other) const {
    if (other.words_.size() > words_.size()) return false;
    for (std::size_t w = 0; w < other.words_.size(); ++w)
      if (other.words_[w] & ~words_[w]) return false;
    return true;
  }

  bool intersects(const NodeSet& other) const {
    std::size_t k = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < k; ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  NodeSet set_union(const NodeSet& other) const {
    NodeSet r;
    r.words_.resize(std::max(words_.size(), other.words_.size()), 0);
    for (std::size_t w = 0; w < r.words_.size(); ++w)
      r.words_[w] = word(w) | other.word(w);
    r.trim();
    return r;
  }

  NodeSet set_intersection(const NodeSet& other) const {
    NodeSet r;
    r.words_.resize(std::min(words_.size(), other.words_.size()), 0);
    for (std::size_t w = 0; w < r.words_.size(); ++w)
      r.words_[w] = word(w) & other.word(w);
    r.trim();
    return r;
  }

  NodeSet set_minus(const NodeSet& other) const {
    NodeSet r = *this;
    for (std::size_t w = 0; w < r.words_.size(); ++w)
      r.words_[w] &= ~other.word(w);
    r.trim();
    return r;
  }

  NodeSet set_symmetric_difference(const NodeSet& other) const {
    NodeSet r;
    r.words_.resize(std::max(words_.size(), other.words_.size()), 0);
    for (std::size_t w = 0; w < r.words_.size(); ++w)
      r.words_[w] = word(w) ^ other.word(w);
    r.trim();
    return r;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> m;
    m.reserve(static_cast<std::size_t>(size()));
    for_each([&](int i) { m.push_back(i); });
    return m;
  }

  /// Members as bits of a single word; only valid while back() < 64.
  std::uint64_t mask64() const {
    if (words_.size() > 1) throw std::out_of_range("NodeSet::mask64: member >= 64");
    return words_.empty() ? 0 : words_[0];
  }

  bool operator==(const NodeSet& other) const { return words_ == other.words_; }

  bool operator<(const NodeSet& other) const {
    std::size_t k = std::max(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < k; ++w) {
      std::uint64_t a = word(w), b = other.word(w);
      if (a == b) continue;
      std::uint64_t low = (a ^ b) & (~(a ^ b) + 1);  // lowest differing bit
      if (a & low) {
        // we own the first differing member; we come first unless the other
        // set has nothing at or beyond it (i.e. it is a strict prefix)
        if (other.any_above(w, low)) return true;
        return false;
      }
      if (any_above(w, low)) return false;
      return true;
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }

  /// "{0 1 2}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int i) {
      if (!first) s += ' ';
      s += std::to_string(i);
      first = false;
    });
    s += '}';
    return s;
  }

private:
  std::vector<std::uint64_t> words_;  // trailing zero words trimmed

  static void check_index(int i) {
    if (i < 0) throw std::out_of_range("NodeSet: negative node index");
  }

  std::uint64_t word(std::size_t w) const { return w < words_.size() ? words_[w] : 0; }

  // any member strictly above bit `low` of word w?
  bool any_above(std::size_t w, std::uint64_t low) const {
    std::uint64_t mask_above = ~((low << 1) - 1);
    if (low == 1ull << 63) mask_above = 0;
    if (word(w) & mask_above) return true;
    for (std::size_t w2 = w + 1; w2 < words_.size(); ++w2)
      if (words_[w2]) return true;
    return false;
  }

  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }
};

}  // namespace modnet

template <>
struct std::hash<modnet::NodeSet> {
  std::size_t operator()(const modnet::NodeSet& s) const { return s.hash(); }
};

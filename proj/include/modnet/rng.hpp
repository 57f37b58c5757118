#pragma once

#include <cstdint>
#include <random>

namespace modnet {

/// Seedable generator wrapping std::mt19937_64. The raw engine sequence is
/// pinned by the standard, and the distributions below are implemented by
/// hand, so identical seeds give identical streams on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform in {0, ..., k-1}, k > 0. Modulo bias is irrelevant here (tie
  /// pools are tiny against 2^64).
  std::size_t index(std::size_t k) { return static_cast<std::size_t>(eng_() % k); }

private:
  std::mt19937_64 eng_;
};

}  // namespace modnet

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace freedim {

/// Thin deterministic wrapper over mt19937_64. Only raw engine output is
/// used (std:: distributions are implementation-defined), so identical
/// seeds give identical samples on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  /// Uniform in [lo, hi] inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  bool coin() { return (engine_() & 1u) != 0; }

  /// k distinct values from 0..n-1, increasing order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace freedim

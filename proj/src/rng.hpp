#pragma once

#include <cstdint>
#include <random>

namespace ghlab {

// mt19937_64 with hand-rolled value derivation. std::uniform_*_distribution
// output is implementation-defined, which would break bit-for-bit
// reproducibility of seeded reports across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  /// Uniform integer in [lo, hi], inclusive. Uses rejection to stay unbiased.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<int>(v % span);
  }

  /// Derives an independent stream seed, for per-trial generators.
  std::uint64_t fork_seed() { return next_u64(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ghlab

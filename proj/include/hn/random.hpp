#pragma once

#include <cstdint>
#include <random>

namespace hn {

/// Seeded generator whose output depends only on the seed (no reliance on
/// implementation-defined standard distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return engine_();
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + draw % span;
  }

  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hn

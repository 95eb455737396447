#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace datamix {

/// Deterministic random stream. The core engine is std::mt19937_64 (its
/// output sequence is pinned by the standard) and every real-valued draw is
/// derived from raw engine words with explicit transforms, so a given seed
/// reproduces bit-identical streams on any conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1); rejects exact zeros.
  double next_open_double() {
    double u = next_double();
    while (u == 0.0) u = next_double();
    return u;
  }

  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /// Unbiased integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound);

  /// Standard normal via the Marsaglia polar method (no draw caching).
  double next_normal();

  /// Gamma(shape, 1) via Marsaglia-Tsang squeeze/rejection for shape >= 1
  /// and the u^(1/shape) power boost for shape < 1. Requires shape > 0.
  double next_gamma(double shape);

  /// Derives an independent stream seed from (seed, stream) with a
  /// splitmix64-style mix; used to hand out per-shard seeds.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

/// In-place Fisher-Yates shuffle driven by the deterministic stream.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace datamix

#include "datamix/rng.hpp"

#include <cmath>

#include "datamix/errors.hpp"

namespace datamix {

std::uint64_t Rng::next_below(std::uint64_t bound) {
  if (bound == 0) throw DataError("next_below: zero bound");
  // Rejection to remove modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

double Rng::next_normal() {
  // Marsaglia polar method; the paired draw is discarded to keep the state
  // a pure function of the draw count.
  while (true) {
    const double u = 2.0 * next_double() - 1.0;
    const double v = 2.0 * next_double() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) {
      return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }
}

double Rng::next_gamma(double shape) {
  if (!(shape > 0.0)) {
    throw DegenerateAlphaError("gamma shape must be positive, got " +
                               std::to_string(shape));
  }
  if (shape < 1.0) {
    // Boost: G(a) = G(a + 1) * U^(1/a).
    const double g = next_gamma(shape + 1.0);
    const double u = next_open_double();
    return g * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang (2000) squeeze/rejection.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    const double x = next_normal();
    const double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = next_open_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace datamix

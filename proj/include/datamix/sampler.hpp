#pragma once

#include <cstdint>
#include <vector>

#include "datamix/domain.hpp"
#include "datamix/rng.hpp"

namespace datamix {

/// Dirichlet mixture sampler settings. Each draw picks a multiplier m, sets
/// alpha = m * base_distribution, and samples Dirichlet(alpha) via
/// independent gamma variates. Small multipliers give sparse mixtures, large
/// ones concentrate around the base distribution.
struct SamplerConfig {
  Mixture base_distribution;
  double multiplier_low = 0.1;
  double multiplier_high = 5.0;
  std::uint64_t seed = 0;
  /// Weights below this floor are clamped to zero and the mixture
  /// renormalized. 0 disables clamping.
  double min_weight_floor = 0.0;
  /// When non-empty, multipliers cycle through this grid instead of being
  /// drawn uniformly from [multiplier_low, multiplier_high].
  std::vector<double> multiplier_grid;
};

/// Relative token availability of the catalog: weight_i = tokens_i / total.
/// Throws EmptyCatalogError when the catalog has no tokens at all.
Mixture token_distribution(const DomainCatalog& catalog);

/// Streaming sampler over one deterministic RNG stream.
class MixtureSampler {
 public:
  explicit MixtureSampler(SamplerConfig config);

  Mixture next();
  const SamplerConfig& config() const { return config_; }

 private:
  SamplerConfig config_;
  Rng rng_;
  std::uint64_t draw_index_ = 0;
};

/// `count` independent draws from a fresh stream seeded by config.seed.
std::vector<Mixture> sample_mixtures(const SamplerConfig& config,
                                     std::size_t count);

}  // namespace datamix

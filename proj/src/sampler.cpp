#include "datamix/sampler.hpp"

#include <cmath>
#include <string>

namespace datamix {

Mixture token_distribution(const DomainCatalog& catalog) {
  if (catalog.total_tokens() == 0) {
    throw EmptyCatalogError("catalog has no available tokens");
  }
  const double total = static_cast<double>(catalog.total_tokens());
  std::vector<double> weights;
  weights.reserve(catalog.size());
  for (const auto& d : catalog.domains()) {
    weights.push_back(static_cast<double>(d.available_tokens) / total);
  }
  return normalize(weights);
}

MixtureSampler::MixtureSampler(SamplerConfig config)
    : config_(std::move(config)), rng_(config_.seed) {
  if (!(config_.multiplier_low > 0.0) ||
      config_.multiplier_low > config_.multiplier_high) {
    throw DataError("multiplier range must satisfy 0 < low <= high");
  }
  for (double m : config_.multiplier_grid) {
    if (!(m > 0.0)) throw DataError("multiplier grid entries must be positive");
  }
  if (config_.min_weight_floor < 0.0 || config_.min_weight_floor >= 1.0) {
    throw DataError("min_weight_floor must lie in [0, 1)");
  }
  // alpha = multiplier * base must be strictly positive component-wise.
  for (std::size_t i = 0; i < config_.base_distribution.size(); ++i) {
    if (config_.base_distribution[i] <= 0.0) {
      throw DegenerateAlphaError(
          "base distribution weight " + std::to_string(i) +
          " is zero; Dirichlet alpha would be degenerate");
    }
  }
}

Mixture MixtureSampler::next() {
  const auto& base = config_.base_distribution.weights();
  const std::size_t n = base.size();

  const double multiplier =
      config_.multiplier_grid.empty()
          ? rng_.next_uniform(config_.multiplier_low, config_.multiplier_high)
          : config_.multiplier_grid[draw_index_ %
                                    config_.multiplier_grid.size()];
  ++draw_index_;

  std::vector<double> draws(n);
  for (int attempt = 0;; ++attempt) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      draws[i] = rng_.next_gamma(multiplier * base[i]);
      sum += draws[i];
    }
    if (sum > 0.0) break;
    // All gammas underflowed (tiny alphas); redraw.
    if (attempt == 1000) {
      throw DegenerateAlphaError("gamma draws underflow to zero");
    }
  }
  Mixture mixture = normalize(draws);

  if (config_.min_weight_floor > 0.0) {
    std::vector<double> clamped = mixture.weights();
    double kept = 0.0;
    for (double& w : clamped) {
      if (w < config_.min_weight_floor) w = 0.0;
      kept += w;
    }
    if (kept == 0.0) {
      // Everything fell below the floor; keep the dominant coordinate.
      std::size_t best = 0;
      for (std::size_t i = 1; i < n; ++i) {
        if (mixture[i] > mixture[best]) best = i;
      }
      clamped.assign(n, 0.0);
      clamped[best] = 1.0;
    }
    mixture = normalize(clamped);
  }
  return mixture;
}

std::vector<Mixture> sample_mixtures(const SamplerConfig& config,
                                     std::size_t count) {
  if (count == 0) throw DataError("sample count must be at least 1");
  MixtureSampler sampler(config);
  std::vector<Mixture> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next());
  return out;
}

}  // namespace datamix

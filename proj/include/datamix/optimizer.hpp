#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "datamix/regressors.hpp"
#include "datamix/sampler.hpp"

namespace datamix {

enum class Objective { kMinimize, kMaximize };

struct SimulationConfig {
  std::size_t candidate_count = 1'000'000;
  SamplerConfig sampler;
  std::size_t top_k = 100;
  Objective objective = Objective::kMinimize;
  /// Retain every candidate and prediction in the ranking. Off by default:
  /// the simulation then keeps only a bounded top-k working set.
  bool keep_candidates = false;
  /// Weight the top-k average by predicted goodness instead of uniformly.
  bool prediction_weighted_average = false;
  /// Worker threads for scoring; 0 means hardware concurrency. The result
  /// is identical for any thread count.
  unsigned threads = 1;
};

/// Ranked simulation output. `candidates` holds either every draw
/// (keep_candidates) or just the retained top-k; `draw_ids` maps each entry
/// back to its original draw index and `order` permutes entries best-first.
struct MixtureRanking {
  std::vector<Mixture> candidates;
  std::vector<double> predictions;
  std::vector<std::size_t> order;
  std::vector<std::uint64_t> draw_ids;
  Mixture best_average;
};

/// Samples config.candidate_count mixtures, scores them with the model, and
/// reduces to the top-k (ties broken by draw index). best_average is the
/// renormalized mean of the top-k weight vectors.
MixtureRanking simulate(const Regressor& model, const SimulationConfig& config);

/// Stable argsort of the mixtures by predicted value under the objective.
std::vector<std::size_t> rank_mixtures(const Regressor& model,
                                       std::span<const Mixture> mixtures,
                                       Objective objective);

}  // namespace datamix

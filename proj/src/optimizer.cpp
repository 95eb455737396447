#include "datamix/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace datamix {

namespace {

// Block of candidates scored per dispatch; bounds memory when streaming.
constexpr std::size_t kBlockSize = 8192;

struct ScoredRef {
  double prediction;
  std::uint64_t draw_id;
};

// Strict-weak order "a ranks better than b" under the objective; draw order
// breaks ties so results never depend on scheduling.
struct Better {
  Objective objective;
  bool operator()(const ScoredRef& a, const ScoredRef& b) const {
    if (a.prediction != b.prediction) {
      return objective == Objective::kMinimize ? a.prediction < b.prediction
                                               : a.prediction > b.prediction;
    }
    return a.draw_id < b.draw_id;
  }
};

void check_dimensions(const Regressor& model, std::size_t candidate_dim) {
  const std::size_t dim = model_dimension(model);
  const bool ok = std::holds_alternative<LinearModel>(model)
                      ? dim == candidate_dim
                      : dim <= candidate_dim;  // trees may ignore trailing dims
  if (!ok) {
    throw DimensionMismatchError("model dimension " + std::to_string(dim) +
                                 " does not fit candidate dimension " +
                                 std::to_string(candidate_dim));
  }
}

void score_block(const Regressor& model, std::span<const Mixture> block,
                 std::span<double> out, unsigned threads) {
  if (threads <= 1 || block.size() < 2 * threads) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      out[i] = predict(model, block[i]);
    }
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::size_t chunk = (block.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(block.size(), t * chunk);
    const std::size_t hi = std::min(block.size(), lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) {
        out[i] = predict(model, block[i]);
      }
    });
  }
  for (auto& w : workers) w.join();
}

Mixture top_k_average(const std::vector<Mixture>& mixtures,
                      const std::vector<double>& predictions,
                      const SimulationConfig& config) {
  const std::size_t n = mixtures.size();
  const std::size_t dim = mixtures.front().size();
  std::vector<double> weights(n, 1.0);
  if (config.prediction_weighted_average && n > 1) {
    // Softmax over standardized goodness; scale-free in the predictions.
    std::vector<double> goodness(predictions);
    if (config.objective == Objective::kMinimize) {
      for (double& g : goodness) g = -g;
    }
    const double mean =
        std::accumulate(goodness.begin(), goodness.end(), 0.0) /
        static_cast<double>(n);
    double var = 0.0;
    for (double g : goodness) var += (g - mean) * (g - mean);
    const double sd = std::sqrt(var / static_cast<double>(n));
    if (sd > 0.0) {
      const double top = *std::max_element(goodness.begin(), goodness.end());
      for (std::size_t i = 0; i < n; ++i) {
        weights[i] = std::exp((goodness[i] - top) / sd);
      }
    }
  }
  std::vector<double> mean_weights(dim, 0.0);
  double weight_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      mean_weights[j] += weights[i] * mixtures[i][j];
    }
    weight_sum += weights[i];
  }
  for (double& w : mean_weights) w /= weight_sum;
  return normalize(mean_weights);
}

}  // namespace

MixtureRanking simulate(const Regressor& model, const SimulationConfig& config) {
  if (config.candidate_count < 1) {
    throw DataError("candidate_count must be at least 1");
  }
  if (config.top_k < 1 || config.top_k > config.candidate_count) {
    throw DataError("top_k must lie in [1, candidate_count]");
  }
  check_dimensions(model, config.sampler.base_distribution.size());

  unsigned threads = config.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const Better better{config.objective};
  MixtureSampler sampler(config.sampler);

  MixtureRanking ranking;
  // Bounded working set: a worst-on-top heap over (prediction, draw id) with
  // mixtures parked in reusable slots, so streaming 10^6 candidates keeps
  // only top_k of them alive.
  struct HeapEntry {
    ScoredRef ref;
    std::size_t slot;
  };
  const auto worse_on_top = [&](const HeapEntry& a, const HeapEntry& b) {
    return better(a.ref, b.ref);
  };
  std::vector<HeapEntry> heap;
  std::vector<Mixture> slots;
  heap.reserve(config.top_k);
  slots.reserve(config.top_k);

  std::vector<Mixture> block;
  std::vector<double> block_predictions;
  std::uint64_t drawn = 0;
  while (drawn < config.candidate_count) {
    const std::size_t count = static_cast<std::size_t>(
        std::min<std::uint64_t>(kBlockSize, config.candidate_count - drawn));
    block.clear();
    for (std::size_t i = 0; i < count; ++i) block.push_back(sampler.next());
    block_predictions.resize(count);
    score_block(model, block, block_predictions, threads);

    for (std::size_t i = 0; i < count; ++i) {
      const ScoredRef entry{block_predictions[i], drawn + i};
      if (heap.size() < config.top_k) {
        slots.push_back(block[i]);
        heap.push_back({entry, slots.size() - 1});
        std::push_heap(heap.begin(), heap.end(), worse_on_top);
      } else if (better(entry, heap.front().ref)) {
        std::pop_heap(heap.begin(), heap.end(), worse_on_top);
        slots[heap.back().slot] = block[i];
        heap.back().ref = entry;
        std::push_heap(heap.begin(), heap.end(), worse_on_top);
      }
    }

    if (config.keep_candidates) {
      for (std::size_t i = 0; i < count; ++i) {
        ranking.candidates.push_back(block[i]);
        ranking.predictions.push_back(block_predictions[i]);
        ranking.draw_ids.push_back(drawn + i);
      }
    }
    drawn += count;
  }

  // Order the retained top-k best-first.
  std::vector<std::size_t> top_order(heap.size());
  std::iota(top_order.begin(), top_order.end(), std::size_t{0});
  std::sort(top_order.begin(), top_order.end(), [&](std::size_t a, std::size_t b) {
    return better(heap[a].ref, heap[b].ref);
  });

  std::vector<Mixture> ranked_mixtures;
  std::vector<double> ranked_predictions;
  ranked_mixtures.reserve(heap.size());
  ranked_predictions.reserve(heap.size());
  for (std::size_t idx : top_order) {
    ranked_mixtures.push_back(slots[heap[idx].slot]);
    ranked_predictions.push_back(heap[idx].ref.prediction);
  }
  ranking.best_average =
      top_k_average(ranked_mixtures, ranked_predictions, config);

  if (config.keep_candidates) {
    ranking.order.resize(ranking.candidates.size());
    std::iota(ranking.order.begin(), ranking.order.end(), std::size_t{0});
    std::stable_sort(ranking.order.begin(), ranking.order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return better({ranking.predictions[a], a},
                                     {ranking.predictions[b], b});
                     });
  } else {
    ranking.candidates = std::move(ranked_mixtures);
    ranking.predictions = std::move(ranked_predictions);
    ranking.draw_ids.reserve(heap.size());
    for (std::size_t idx : top_order) {
      ranking.draw_ids.push_back(heap[idx].ref.draw_id);
    }
    ranking.order.resize(heap.size());
    std::iota(ranking.order.begin(), ranking.order.end(), std::size_t{0});
  }
  return ranking;
}

std::vector<std::size_t> rank_mixtures(const Regressor& model,
                                       std::span<const Mixture> mixtures,
                                       Objective objective) {
  if (mixtures.empty()) throw DataError("rank_mixtures: empty mixture list");
  std::vector<double> predictions;
  predictions.reserve(mixtures.size());
  for (const auto& m : mixtures) predictions.push_back(predict(model, m));

  std::vector<std::size_t> order(mixtures.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return objective == Objective::kMinimize
                                ? predictions[a] < predictions[b]
                                : predictions[a] > predictions[b];
                   });
  return order;
}

}  // namespace datamix

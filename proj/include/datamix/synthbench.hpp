#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "datamix/domain.hpp"
#include "datamix/optimizer.hpp"
#include "datamix/regressors.hpp"

namespace datamix {

/// Synthetic ground-truth loss surface over the simplex:
///   base + linear.x + x'Px + sum_i c_i * log(x_i + delta) [+ noise]
/// Pairwise terms create domain interactions a linear surrogate cannot
/// capture; log-bend terms give the near-log-linear single-domain regime.
struct SyntheticSurface {
  static constexpr double kLogDelta = 1e-4;

  double base = 0.0;
  std::vector<double> linear_terms;
  std::vector<std::vector<double>> pairwise_terms;  // symmetric, d x d
  std::vector<double> curvature_terms;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;

  std::size_t dimension() const { return linear_terms.size(); }
};

/// Deterministic surface value. With noise, a Gaussian perturbation keyed by
/// (surface seed, mixture bits) is added, so re-evaluating the same mixture
/// reproduces the same noisy label.
double surface_eval(const SyntheticSurface& surface, const Mixture& mixture,
                    bool with_noise);

/// Shipped benchmark surfaces: "linear", "log_bend", "interaction_heavy".
/// All are 17-dimensional. Throws DataError for unknown names.
SyntheticSurface benchmark_surface(std::string_view preset);
std::vector<std::string> benchmark_surface_names();

struct BenchmarkParams {
  std::vector<std::size_t> train_counts{64, 128, 256, 512};
  std::size_t held_out_count = 256;
  Mixture sampler_base;  // drawn-mixture base distribution
  double multiplier_low = 0.1;
  double multiplier_high = 5.0;
  GbdtParams gbdt;
  std::vector<double> ridge_grid{kDefaultPenaltyGrid.begin(),
                                 kDefaultPenaltyGrid.end()};
  std::size_t ridge_folds = 5;
};

/// Token-availability-shaped defaults; the base distribution matches the
/// shipped 17-domain catalog when the surface is 17-dimensional, otherwise
/// it is uniform.
BenchmarkParams default_benchmark_params(const SyntheticSurface& surface);

struct BenchmarkRow {
  std::size_t train_count = 0;
  std::string family;   // "ridge" | "gbdt"
  double spearman_rho;  // on held-out noiseless labels
};

/// For each train count: sample that many mixtures, label them with the
/// noisy surface, fit both regressor families, and report held-out Spearman
/// rho against noiseless labels. Fully deterministic per seed.
std::vector<BenchmarkRow> run_rank_benchmark(const SyntheticSurface& surface,
                                             const BenchmarkParams& params,
                                             std::uint64_t seed);

struct StabilityConfig {
  std::string family = "gbdt";
  std::size_t train_count = 512;
  std::size_t candidate_count = 65536;
  std::size_t top_k = 1024;
  Mixture sampler_base;
  double multiplier_low = 0.1;
  double multiplier_high = 5.0;
  GbdtParams gbdt;
  std::vector<double> ridge_grid{kDefaultPenaltyGrid.begin(),
                                 kDefaultPenaltyGrid.end()};
  std::size_t ridge_folds = 5;
};

StabilityConfig default_stability_config(const SyntheticSurface& surface);

/// Divergence between the top-mixture distributions of two independent
/// refits (training sets and noise drawn under seed_a vs seed_b).
struct StabilityReport {
  std::vector<double> per_domain_abs_diff;  // |mean top-k weight difference|
  double max_abs_diff = 0.0;
  double mean_abs_diff = 0.0;
};

StabilityReport run_stability_check(const SyntheticSurface& surface,
                                    std::uint64_t seed_a, std::uint64_t seed_b,
                                    const StabilityConfig& config);

}  // namespace datamix

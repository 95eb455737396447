#include "datamix/synthbench.hpp"

#include <bit>
#include <cmath>
#include <cstring>

#include "datamix/io.hpp"
#include "datamix/metrics.hpp"
#include "datamix/pile.hpp"
#include "datamix/rng.hpp"
#include "datamix/sampler.hpp"

namespace datamix {

namespace {

std::uint64_t mixture_bits_hash(const Mixture& mixture) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (double w : mixture.weights()) {
    const auto bits = std::bit_cast<std::uint64_t>(w);
    for (int shift = 0; shift < 64; shift += 8) {
      hash ^= (bits >> shift) & 0xFF;
      hash *= 0x100000001B3ULL;
    }
  }
  return hash;
}

void check_surface(const SyntheticSurface& surface) {
  const std::size_t d = surface.dimension();
  if (d == 0) throw DataError("surface has no linear terms");
  if (surface.curvature_terms.size() != d) {
    throw DimensionMismatchError("curvature terms sized " +
                                 std::to_string(surface.curvature_terms.size()) +
                                 ", expected " + std::to_string(d));
  }
  if (surface.pairwise_terms.size() != d) {
    throw DimensionMismatchError("pairwise matrix has " +
                                 std::to_string(surface.pairwise_terms.size()) +
                                 " rows, expected " + std::to_string(d));
  }
  for (const auto& row : surface.pairwise_terms) {
    if (row.size() != d) {
      throw DimensionMismatchError("pairwise matrix is not square");
    }
  }
  if (surface.noise_sigma < 0.0) throw DataError("negative noise sigma");
}

}  // namespace

double surface_eval(const SyntheticSurface& surface, const Mixture& mixture,
                    bool with_noise) {
  check_surface(surface);
  const std::size_t d = surface.dimension();
  if (mixture.size() != d) {
    throw DimensionMismatchError("mixture sized " +
                                 std::to_string(mixture.size()) +
                                 " against a " + std::to_string(d) +
                                 "-dimensional surface");
  }
  const auto& x = mixture.weights();
  double value = surface.base;
  for (std::size_t i = 0; i < d; ++i) {
    value += surface.linear_terms[i] * x[i];
    value +=
        surface.curvature_terms[i] * std::log(x[i] + SyntheticSurface::kLogDelta);
    for (std::size_t j = 0; j < d; ++j) {
      value += x[i] * surface.pairwise_terms[i][j] * x[j];
    }
  }
  if (with_noise && surface.noise_sigma > 0.0) {
    Rng noise(Rng::derive(surface.seed, mixture_bits_hash(mixture)));
    value += surface.noise_sigma * noise.next_normal();
  }
  return value;
}

SyntheticSurface benchmark_surface(std::string_view preset) {
  constexpr std::size_t d = 17;
  SyntheticSurface surface;
  surface.linear_terms.assign(d, 0.0);
  surface.curvature_terms.assign(d, 0.0);
  surface.pairwise_terms.assign(d, std::vector<double>(d, 0.0));
  surface.base = 3.4;
  surface.seed = 0x5EED;

  auto pair = [&](std::size_t i, std::size_t j, double value) {
    surface.pairwise_terms[i][j] = value;
    surface.pairwise_terms[j][i] = value;
  };

  if (preset == "linear") {
    // Pure linear loss surface; a ridge fit recovers the ranking exactly.
    for (std::size_t i = 0; i < d; ++i) {
      surface.linear_terms[i] =
          (i % 2 == 0 ? -1.0 : 1.0) * (0.2 + 0.05 * static_cast<double>(i));
    }
    surface.noise_sigma = 0.0;
    return surface;
  }
  if (preset == "log_bend") {
    // Near-log-linear single-domain regimes: loss falls with log(weight).
    for (std::size_t i = 0; i < d; ++i) {
      surface.linear_terms[i] = (i % 3 == 0) ? -0.3 : 0.1;
    }
    surface.curvature_terms[2] = -0.04;
    surface.curvature_terms[10] = -0.06;
    surface.curvature_terms[5] = -0.02;
    surface.noise_sigma = 0.01;
    return surface;
  }
  if (preset == "interaction_heavy") {
    // Dominant web-like domain plus strong cross-domain interactions that a
    // linear model cannot represent.
    surface.linear_terms[0] = -1.1;
    surface.linear_terms[1] = 0.35;
    surface.linear_terms[2] = -0.25;
    surface.linear_terms[3] = 0.3;
    surface.linear_terms[4] = -0.15;
    for (std::size_t i = 5; i < d; ++i) {
      surface.linear_terms[i] = (i % 2 == 0 ? 0.06 : -0.06);
    }
    pair(0, 0, 1.1);   // diminishing returns on the dominant domain
    pair(0, 2, -1.6);
    pair(1, 3, 1.4);
    pair(2, 4, -1.2);
    pair(1, 2, 0.9);
    pair(0, 5, 0.8);
    pair(3, 4, -1.0);
    pair(5, 6, -0.7);
    surface.curvature_terms[10] = -0.03;
    surface.noise_sigma = 0.02;
    return surface;
  }
  throw DataError("unknown surface preset '" + std::string(preset) + "'");
}

std::vector<std::string> benchmark_surface_names() {
  return {"linear", "log_bend", "interaction_heavy"};
}

namespace {

Mixture default_base_for(const SyntheticSurface& surface) {
  if (surface.dimension() == pile_catalog().size()) {
    return token_distribution(pile_catalog());
  }
  return normalize(std::vector<double>(surface.dimension(), 1.0));
}

RegressionDataset labeled_dataset(const SyntheticSurface& surface,
                                  const std::vector<Mixture>& mixtures,
                                  bool with_noise) {
  // Dataset over an anonymous catalog matching the surface dimension.
  std::vector<DomainInfo> domains;
  for (std::size_t i = 0; i < surface.dimension(); ++i) {
    domains.push_back({"domain_" + std::to_string(i), 1});
  }
  DomainCatalog catalog(std::move(domains));
  std::vector<TrainingRun> runs;
  runs.reserve(mixtures.size());
  for (const auto& m : mixtures) {
    runs.push_back(
        TrainingRun{m, {{"loss", surface_eval(surface, m, with_noise)}}, {}});
  }
  return RegressionDataset(std::move(catalog), std::move(runs), "loss");
}

Regressor fit_family(const std::string& family, const RegressionDataset& data,
                     const BenchmarkParams& params, std::uint64_t seed) {
  if (family == "ridge") {
    auto [model, report] =
        fit_ridge_cv(data, params.ridge_grid, params.ridge_folds, seed);
    return model;
  }
  GbdtParams gbdt = params.gbdt;
  gbdt.seed = seed;
  auto [model, report] = fit_gbdt(data, gbdt);
  return model;
}

}  // namespace

BenchmarkParams default_benchmark_params(const SyntheticSurface& surface) {
  BenchmarkParams params;
  params.sampler_base = default_base_for(surface);
  return params;
}

std::vector<BenchmarkRow> run_rank_benchmark(const SyntheticSurface& surface,
                                             const BenchmarkParams& params,
                                             std::uint64_t seed) {
  check_surface(surface);
  if (params.held_out_count < 10) {
    throw DataError("held_out_count must be at least 10");
  }
  for (std::size_t count : params.train_counts) {
    if (count < 10) throw DataError("train counts must be at least 10");
  }

  // Held-out mixtures and their noiseless labels are shared by every row.
  SamplerConfig held_out_config{params.sampler_base, params.multiplier_low,
                                params.multiplier_high,
                                Rng::derive(seed, 0xE0A1), 0.0};
  const std::vector<Mixture> held_out =
      sample_mixtures(held_out_config, params.held_out_count);
  const RegressionDataset held_out_data =
      labeled_dataset(surface, held_out, /*with_noise=*/false);

  std::vector<BenchmarkRow> rows;
  for (std::size_t t = 0; t < params.train_counts.size(); ++t) {
    const std::size_t train_count = params.train_counts[t];
    SamplerConfig train_config{params.sampler_base, params.multiplier_low,
                               params.multiplier_high,
                               Rng::derive(seed, 0x7A00 + t), 0.0};
    const std::vector<Mixture> train =
        sample_mixtures(train_config, train_count);
    const RegressionDataset train_data =
        labeled_dataset(surface, train, /*with_noise=*/true);

    for (const std::string family : {"ridge", "gbdt"}) {
      const Regressor model = fit_family(family, train_data, params,
                                         Rng::derive(seed, 0xF17 + t));
      const MetricsReport report = evaluate_regressor(model, held_out_data);
      rows.push_back(BenchmarkRow{train_count, family,
                                  report.spearman_rho.value_or(0.0)});
    }
  }
  return rows;
}

StabilityConfig default_stability_config(const SyntheticSurface& surface) {
  StabilityConfig config;
  config.sampler_base = default_base_for(surface);
  return config;
}

namespace {

std::vector<double> top_mixture_distribution(const SyntheticSurface& surface,
                                             const StabilityConfig& config,
                                             std::uint64_t fit_seed) {
  SamplerConfig train_config{config.sampler_base, config.multiplier_low,
                             config.multiplier_high,
                             Rng::derive(fit_seed, 0x117A11), 0.0};
  const std::vector<Mixture> train =
      sample_mixtures(train_config, config.train_count);
  const RegressionDataset data =
      labeled_dataset(surface, train, /*with_noise=*/true);

  Regressor model;
  if (config.family == "ridge") {
    model = fit_ridge_cv(data, config.ridge_grid, config.ridge_folds, fit_seed)
                .first;
  } else {
    GbdtParams gbdt = config.gbdt;
    gbdt.seed = fit_seed;
    model = fit_gbdt(data, gbdt).first;
  }

  SimulationConfig sim;
  sim.candidate_count = config.candidate_count;
  sim.top_k = config.top_k;
  sim.objective = Objective::kMinimize;
  sim.sampler = SamplerConfig{config.sampler_base, config.multiplier_low,
                              config.multiplier_high,
                              Rng::derive(fit_seed, 0x51A1), 0.0};
  const MixtureRanking ranking = simulate(model, sim);
  return ranking.best_average.weights();
}

}  // namespace

StabilityReport run_stability_check(const SyntheticSurface& surface,
                                    std::uint64_t seed_a, std::uint64_t seed_b,
                                    const StabilityConfig& config) {
  check_surface(surface);
  const auto dist_a = top_mixture_distribution(surface, config, seed_a);
  const auto dist_b = top_mixture_distribution(surface, config, seed_b);

  StabilityReport report;
  report.per_domain_abs_diff.resize(dist_a.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < dist_a.size(); ++i) {
    report.per_domain_abs_diff[i] = std::abs(dist_a[i] - dist_b[i]);
    report.max_abs_diff =
        std::max(report.max_abs_diff, report.per_domain_abs_diff[i]);
    sum += report.per_domain_abs_diff[i];
  }
  report.mean_abs_diff = sum / static_cast<double>(dist_a.size());
  return report;
}

}  // namespace datamix

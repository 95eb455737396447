#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "datamix/domain.hpp"
#include "datamix/io.hpp"
#include "datamix/optimizer.hpp"
#include "datamix/regressors.hpp"

namespace datamix {

/// End-to-end pipeline settings: where the training log lives, which
/// surrogate family to fit, and how to simulate the candidate space.
struct PipelineConfig {
  /// Inline catalog, a path to a catalog JSON file, or neither (the shipped
  /// default catalog).
  std::optional<std::vector<DomainInfo>> catalog_inline;
  std::optional<std::filesystem::path> catalog_path;

  /// Training log; "fixture:result-table" selects the bundled result table.
  std::filesystem::path logs_path;
  std::string target_metric;
  bool logs_json_lines = false;

  std::string family = "gbdt";  // "ridge" | "gbdt"
  GbdtParams gbdt;
  std::vector<double> ridge_grid{kDefaultPenaltyGrid.begin(),
                                 kDefaultPenaltyGrid.end()};
  std::size_t ridge_folds = 5;

  /// Design-stage sample of candidate training mixtures (first artifact).
  std::size_t sample_count = 512;
  double multiplier_low = 0.1;
  double multiplier_high = 5.0;
  double min_weight_floor = 0.0;

  std::size_t candidate_count = 1'000'000;
  std::size_t top_k = 100;
  Objective objective = Objective::kMinimize;
  unsigned threads = 1;

  std::uint64_t seed = 0;
  std::filesystem::path output_dir;
};

PipelineConfig pipeline_config_from_json_text(const std::string& text);
PipelineConfig load_pipeline_config(const std::filesystem::path& path);
std::string pipeline_config_json(const PipelineConfig& config);

/// Catalog resolution order: inline > file > shipped default.
DomainCatalog resolve_catalog(const PipelineConfig& config);

/// Catalog JSON file: {"domains": [{"name": ..., "available_tokens": ...}]}.
DomainCatalog load_catalog_file(const std::filesystem::path& path);

struct PipelineResult {
  Mixture final_mixture;
  std::uint64_t config_hash = 0;
  std::filesystem::path sampled_mixtures_path;
  std::filesystem::path model_path;
  std::filesystem::path ranking_path;
  std::filesystem::path final_mixture_path;
};

/// sample -> ingest -> fit -> simulate -> emit. Writes sampled_mixtures.csv,
/// model.json, ranking.csv, and final_mixture.json under output_dir, all
/// stamped with the config hash and seed. Identical config and seed produce
/// byte-identical artifacts.
PipelineResult run_pipeline(const PipelineConfig& config);

/// Reads the training log named by the config (file or fixture pseudo-path).
RegressionDataset ingest_pipeline_logs(const PipelineConfig& config,
                                       const DomainCatalog& catalog);

}  // namespace datamix

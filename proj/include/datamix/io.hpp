#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "datamix/domain.hpp"
#include "datamix/metrics.hpp"
#include "datamix/regressors.hpp"

namespace datamix {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

/// Locale-independent strict double parse of the whole string.
std::optional<double> parse_double(std::string_view text);

struct IngestOptions {
  /// Row weight sums are accepted within this tolerance of 1 and then
  /// renormalized onto the exact simplex.
  double weight_tolerance = Mixture::kPublishedTolerance;
  /// Read JSON-lines instead of CSV.
  bool json_lines = false;
};

/// Reads a training log into a dataset. CSV: one header row naming domain
/// columns (snake_cased catalog names) and metric columns (optionally
/// prefixed "metric:"); '#' lines are comments. JSON-lines: one object per
/// line with "weights" and "metrics". Duplicate mixtures are kept.
RegressionDataset ingest_runs(const std::filesystem::path& path,
                              const DomainCatalog& catalog,
                              const std::string& target_metric,
                              const IngestOptions& options = {});

/// Same reader over an already-loaded text buffer (used for fixture data
/// and tests).
RegressionDataset ingest_runs_text(const std::string& text,
                                   const DomainCatalog& catalog,
                                   const std::string& target_metric,
                                   const IngestOptions& options = {});

/// Provenance stamp written into every artifact.
struct Provenance {
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;
};

/// Writes a dataset in the CSV log format (round-trips through
/// ingest_runs: weights to 1e-9, metrics exactly).
void write_runs_csv(std::ostream& out, const RegressionDataset& dataset,
                    const std::optional<Provenance>& provenance = {});

/// Plain mixtures-only CSV (snake_cased domain header).
void write_mixtures_csv(std::ostream& out, const DomainCatalog& catalog,
                        std::span<const Mixture> mixtures,
                        const std::optional<Provenance>& provenance = {});

/// Single-mixture JSON document with domain names and provenance.
std::string mixture_json(const DomainCatalog& catalog, const Mixture& mixture,
                         const std::optional<Provenance>& provenance = {});
Mixture mixture_from_json_text(const std::string& text,
                               const DomainCatalog& catalog);

/// Versioned model document: the regressor plus the domain names and target
/// metric it was fitted against. Floats survive the round trip exactly.
struct ModelDocument {
  Regressor model;
  std::vector<std::string> domain_names;
  std::string target_metric;
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;
};

std::string model_json(const ModelDocument& document);
ModelDocument model_from_json_text(const std::string& text);

ModelDocument load_model(const std::filesystem::path& path);
void save_model(const std::filesystem::path& path,
                const ModelDocument& document);

/// Reads a generic numeric table: header names the columns, each later row
/// is one model. "model_id"/"tag:" columns are skipped, '#' lines ignored.
LabeledTable read_labeled_table_text(const std::string& text);
LabeledTable read_labeled_table(const std::filesystem::path& path);

/// FNV-1a over a canonical serialization; stable across runs and builds.
std::uint64_t fnv1a_hash(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& text);

}  // namespace datamix

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "datamix/errors.hpp"

namespace datamix {

struct DomainInfo {
  std::string name;
  std::uint64_t available_tokens = 0;
};

/// Ordered set of named training domains. The declaration order is frozen at
/// construction and defines the coordinate system every Mixture lives in.
class DomainCatalog {
 public:
  explicit DomainCatalog(std::vector<DomainInfo> domains);

  std::size_t size() const { return domains_.size(); }
  const DomainInfo& domain(std::size_t i) const { return domains_.at(i); }
  const std::vector<DomainInfo>& domains() const { return domains_; }
  std::uint64_t total_tokens() const { return total_tokens_; }

  /// Index lookup by exact name.
  std::optional<std::size_t> index_of(std::string_view name) const;

 private:
  std::vector<DomainInfo> domains_;
  std::uint64_t total_tokens_ = 0;
};

/// A point on the probability simplex: one weight per catalog domain.
/// Weights are stored exactly as given; validation only checks them.
class Mixture {
 public:
  /// Tolerance on |sum - 1| for mixtures we compute ourselves.
  static constexpr double kStrictTolerance = 1e-6;
  /// Tolerance for externally published vectors rounded to 3 decimals.
  static constexpr double kPublishedTolerance = 2e-3;

  /// Empty placeholder; every non-empty Mixture comes from validated() or
  /// normalize().
  Mixture() = default;

  /// Validates and wraps a weight vector. Throws InvalidMixtureError when a
  /// weight leaves [0,1] or the sum strays from 1 beyond `tolerance`.
  static Mixture validated(std::vector<double> weights,
                           double tolerance = kStrictTolerance);

  const std::vector<double>& weights() const { return weights_; }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return weights_.size(); }

  bool operator==(const Mixture& other) const = default;

 private:
  explicit Mixture(std::vector<double> weights) : weights_(std::move(weights)) {}

  std::vector<double> weights_;
};

/// raw / sum(raw). Throws NonFiniteError, NegativeWeightError, or
/// AllZeroError when the input is unusable.
Mixture normalize(std::span<const double> raw_weights);

/// Splits an integer token budget across domains in proportion to the
/// mixture, using largest-remainder rounding (ties by domain order). The
/// returned counts always sum to exactly `budget`.
std::vector<std::uint64_t> allocate_tokens(const Mixture& mixture,
                                           std::uint64_t budget);

/// One proxy-training record: the mixture it was trained on plus the
/// evaluated metric values.
struct TrainingRun {
  Mixture mixture;
  std::map<std::string, double> metrics;
  std::map<std::string, std::string> tags;
};

/// Training matrix for the regressors: runs over a fixed catalog with a
/// designated target metric present in every run.
class RegressionDataset {
 public:
  RegressionDataset(DomainCatalog catalog, std::vector<TrainingRun> runs,
                    std::string target_metric);

  const DomainCatalog& catalog() const { return catalog_; }
  const std::vector<TrainingRun>& runs() const { return runs_; }
  const std::string& target_metric() const { return target_metric_; }
  std::size_t run_count() const { return runs_.size(); }

  /// Target metric values, one per run, in run order.
  std::vector<double> targets() const;

 private:
  DomainCatalog catalog_;
  std::vector<TrainingRun> runs_;
  std::string target_metric_;
};

struct ResultRow {
  std::string model_id;
  Mixture mixture;
  std::map<std::string, double> scores;
};

/// Published per-model results: a mixture and task scores per row.
struct ResultTable {
  std::vector<std::string> domain_names;
  std::vector<std::string> task_names;
  std::vector<ResultRow> rows;
};

/// Lowercases a display name and collapses non-alphanumeric runs to '_'
/// ("Gutenberg (PG-19)" -> "gutenberg_pg_19"). Used for CSV column names.
std::string snake_case(std::string_view name);

}  // namespace datamix

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "datamix/domain.hpp"
#include "datamix/regressors.hpp"

namespace datamix {

/// Correlations are nullopt when an input vector is constant: the value is
/// undefined there and must stay distinguishable from 0.
struct MetricsReport {
  std::optional<double> spearman_rho;
  std::optional<double> pearson_r;
  double mse = 0.0;
  std::size_t n = 0;
};

/// Product-moment correlation. Throws LengthMismatchError unless both spans
/// have the same length >= 2.
std::optional<double> pearson(std::span<const double> x,
                              std::span<const double> y);

/// Pearson correlation of rank vectors; ties get average ranks.
std::optional<double> spearman(std::span<const double> x,
                               std::span<const double> y);

/// Mean squared difference.
double mse(std::span<const double> predicted, std::span<const double> actual);

/// Average ranks (1-based); tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

/// Predicts every held-out run and scores the predictions against the true
/// target values.
MetricsReport evaluate_regressor(const Regressor& model,
                                 const RegressionDataset& held_out);

/// Column-major labeled matrix: columns[a] is one variable across models.
struct LabeledTable {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> columns;

  std::size_t row_count() const {
    return columns.empty() ? 0 : columns.front().size();
  }
};

struct CorrelationMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<std::optional<double>>> values;  // [row][col]
};

/// values[a][b] = pearson(left.columns[a], right.columns[b]); negate_left
/// flips the sign of every left column first (for loss-vs-score grids where
/// lower loss should read as positive correlation).
CorrelationMatrix correlate_tables(const LabeledTable& left,
                                   const LabeledTable& right,
                                   bool negate_left = false);

/// CSV with the column labels as header row and row labels as first column.
/// Undefined cells are written as "undefined".
std::string correlation_csv(const CorrelationMatrix& matrix);

}  // namespace datamix

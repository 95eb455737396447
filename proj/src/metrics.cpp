#include "datamix/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "datamix/io.hpp"

namespace datamix {

namespace {

void require_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw LengthMismatchError("vector lengths differ: " +
                              std::to_string(x.size()) + " vs " +
                              std::to_string(y.size()));
  }
  if (x.size() < 2) {
    throw LengthMismatchError("need at least 2 points, got " +
                              std::to_string(x.size()));
  }
}

}  // namespace

std::optional<double> pearson(std::span<const double> x,
                              std::span<const double> y) {
  require_pair(x, y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;  // constant input
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j (0-based) share the average 1-based rank
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

std::optional<double> spearman(std::span<const double> x,
                               std::span<const double> y) {
  require_pair(x, y);
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

double mse(std::span<const double> predicted, std::span<const double> actual) {
  if (predicted.size() != actual.size()) {
    throw LengthMismatchError("vector lengths differ: " +
                              std::to_string(predicted.size()) + " vs " +
                              std::to_string(actual.size()));
  }
  if (predicted.empty()) throw LengthMismatchError("empty vectors");
  double sum = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const double d = predicted[i] - actual[i];
    sum += d * d;
  }
  return sum / static_cast<double>(predicted.size());
}

MetricsReport evaluate_regressor(const Regressor& model,
                                 const RegressionDataset& held_out) {
  if (held_out.run_count() < 2) {
    throw InsufficientDataError("evaluation needs at least 2 held-out runs");
  }
  std::vector<double> predicted;
  predicted.reserve(held_out.run_count());
  for (const auto& run : held_out.runs()) {
    predicted.push_back(predict(model, run.mixture));
  }
  const std::vector<double> actual = held_out.targets();

  MetricsReport report;
  report.n = held_out.run_count();
  report.mse = mse(predicted, actual);
  report.pearson_r = pearson(predicted, actual);
  report.spearman_rho = spearman(predicted, actual);
  return report;
}

CorrelationMatrix correlate_tables(const LabeledTable& left,
                                   const LabeledTable& right,
                                   bool negate_left) {
  if (left.labels.size() != left.columns.size() ||
      right.labels.size() != right.columns.size()) {
    throw LengthMismatchError("table labels do not match column count");
  }
  if (left.row_count() != right.row_count()) {
    throw LengthMismatchError("tables have different model counts: " +
                              std::to_string(left.row_count()) + " vs " +
                              std::to_string(right.row_count()));
  }
  if (left.row_count() < 2) {
    throw LengthMismatchError("correlation needs at least 2 models");
  }

  CorrelationMatrix matrix;
  matrix.row_labels = left.labels;
  matrix.col_labels = right.labels;
  matrix.values.resize(left.columns.size());
  for (std::size_t a = 0; a < left.columns.size(); ++a) {
    std::vector<double> la = left.columns[a];
    if (negate_left) {
      for (double& v : la) v = -v;
    }
    matrix.values[a].reserve(right.columns.size());
    for (std::size_t b = 0; b < right.columns.size(); ++b) {
      matrix.values[a].push_back(pearson(la, right.columns[b]));
    }
  }
  return matrix;
}

std::string correlation_csv(const CorrelationMatrix& matrix) {
  std::ostringstream out;
  out << "label";
  for (const auto& c : matrix.col_labels) out << ',' << c;
  out << '\n';
  for (std::size_t r = 0; r < matrix.row_labels.size(); ++r) {
    out << matrix.row_labels[r];
    for (const auto& cell : matrix.values[r]) {
      out << ',' << (cell ? format_double(*cell) : "undefined");
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace datamix

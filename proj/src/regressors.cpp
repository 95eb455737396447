#include "datamix/regressors.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "datamix/rng.hpp"

namespace datamix {

namespace {

Eigen::MatrixXd feature_matrix(const RegressionDataset& data) {
  const std::size_t n = data.run_count();
  const std::size_t d = data.catalog().size();
  Eigen::MatrixXd x(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& w = data.runs()[i].mixture.weights();
    for (std::size_t j = 0; j < d; ++j) x(i, j) = w[j];
  }
  return x;
}

struct RidgeFit {
  double intercept = 0.0;
  Eigen::VectorXd coefficients;
};

// Centered normal equations: (Xc'Xc + penalty * I) w = Xc'yc, intercept
// recovered from the means. At penalty 0 the simplex features are rank
// deficient, so that path goes through an SVD pseudo-inverse (minimum-norm
// solution) unless strict mode asks for an error.
RidgeFit solve_ridge(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                     double penalty, bool strict_singular) {
  const auto d = x.cols();
  const Eigen::RowVectorXd x_mean = x.colwise().mean();
  const double y_mean = y.mean();
  const Eigen::MatrixXd xc = x.rowwise() - x_mean;
  const Eigen::VectorXd yc = y.array() - y_mean;

  RidgeFit fit;
  if (penalty > 0.0) {
    Eigen::MatrixXd gram = xc.transpose() * xc;
    gram.diagonal().array() += penalty;
    fit.coefficients = gram.ldlt().solve(xc.transpose() * yc);
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        xc, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-12);
    if (svd.rank() < d && strict_singular) {
      throw SingularSystemError(
          "rank-deficient features at zero penalty (rank " +
          std::to_string(svd.rank()) + " of " + std::to_string(d) + ")");
    }
    fit.coefficients = svd.solve(yc);
  }
  fit.intercept = y_mean - x_mean.dot(fit.coefficients);
  return fit;
}

double dataset_mse(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                   const RidgeFit& fit, Eigen::VectorXd* residuals_out) {
  const Eigen::VectorXd residuals =
      y - ((x * fit.coefficients).array() + fit.intercept).matrix();
  if (residuals_out) *residuals_out = residuals;
  return residuals.squaredNorm() / static_cast<double>(y.size());
}

LinearModel to_model(const RidgeFit& fit, double penalty) {
  LinearModel model;
  model.intercept = fit.intercept;
  model.coefficients.assign(fit.coefficients.data(),
                            fit.coefficients.data() + fit.coefficients.size());
  model.penalty = penalty;
  return model;
}

void require_runs(const RegressionDataset& data, std::size_t minimum,
                  const char* what) {
  if (data.run_count() < minimum) {
    throw InsufficientDataError(std::string(what) + " needs at least " +
                                std::to_string(minimum) + " runs, got " +
                                std::to_string(data.run_count()));
  }
}

}  // namespace

std::pair<LinearModel, FitReport> fit_ridge(const RegressionDataset& data,
                                            double penalty,
                                            const RidgeOptions& options) {
  require_runs(data, 2, "ridge fit");
  if (penalty < 0.0) throw DataError("ridge penalty must be non-negative");

  const Eigen::MatrixXd x = feature_matrix(data);
  const auto targets = data.targets();
  const Eigen::VectorXd y =
      Eigen::Map<const Eigen::VectorXd>(targets.data(), targets.size());

  const RidgeFit fit = solve_ridge(x, y, penalty, options.strict_singular);

  FitReport report;
  Eigen::VectorXd residuals;
  report.training_mse = dataset_mse(x, y, fit, &residuals);
  report.residuals.assign(residuals.data(), residuals.data() + residuals.size());
  return {to_model(fit, penalty), std::move(report)};
}

std::pair<LinearModel, FitReport> fit_ridge_cv(
    const RegressionDataset& data, std::span<const double> penalty_grid,
    std::size_t folds, std::uint64_t seed) {
  if (folds < 2) throw DataError("cross-validation needs at least 2 folds");
  if (penalty_grid.empty()) throw DataError("empty penalty grid");
  for (double p : penalty_grid) {
    if (!(p >= 0.0)) throw DataError("penalties must be non-negative");
  }
  require_runs(data, folds, "cross-validation");

  const std::size_t n = data.run_count();
  const Eigen::MatrixXd x = feature_matrix(data);
  const auto targets = data.targets();
  const Eigen::VectorXd y =
      Eigen::Map<const Eigen::VectorXd>(targets.data(), targets.size());

  // Seeded shuffle, then contiguous folds (the first n % folds get one
  // extra row each).
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rng rng(seed);
  shuffle(perm, rng);

  std::vector<std::pair<std::size_t, std::size_t>> fold_bounds;
  std::size_t cursor = 0;
  for (std::size_t f = 0; f < folds; ++f) {
    const std::size_t size = n / folds + (f < n % folds ? 1 : 0);
    fold_bounds.emplace_back(cursor, cursor + size);
    cursor += size;
  }

  std::vector<double> grid_sorted(penalty_grid.begin(), penalty_grid.end());
  std::sort(grid_sorted.begin(), grid_sorted.end());

  std::map<double, double> cv_scores;
  double best_penalty = grid_sorted.front();
  double best_score = std::numeric_limits<double>::infinity();
  for (double penalty : grid_sorted) {
    double score_sum = 0.0;
    std::size_t scored = 0;
    for (const auto& [lo, hi] : fold_bounds) {
      if (lo == hi) continue;
      const std::size_t train_n = n - (hi - lo);
      Eigen::MatrixXd train_x(train_n, x.cols());
      Eigen::VectorXd train_y(train_n);
      Eigen::MatrixXd val_x(hi - lo, x.cols());
      Eigen::VectorXd val_y(hi - lo);
      std::size_t ti = 0;
      for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t row = perm[pos];
        if (pos >= lo && pos < hi) {
          val_x.row(pos - lo) = x.row(row);
          val_y(pos - lo) = y(row);
        } else {
          train_x.row(ti) = x.row(row);
          train_y(ti) = y(row);
          ++ti;
        }
      }
      const RidgeFit fit = solve_ridge(train_x, train_y, penalty, false);
      const Eigen::VectorXd val_res =
          val_y - ((val_x * fit.coefficients).array() + fit.intercept).matrix();
      score_sum += val_res.squaredNorm() / static_cast<double>(val_res.size());
      ++scored;
    }
    const double mean_score = score_sum / static_cast<double>(scored);
    cv_scores[penalty] = mean_score;
    if (mean_score < best_score) {  // ties keep the smaller penalty
      best_score = mean_score;
      best_penalty = penalty;
    }
  }

  auto [model, report] = fit_ridge(data, best_penalty);
  report.cv_scores = std::move(cv_scores);
  report.seed = seed;
  return {std::move(model), std::move(report)};
}

// --- gradient boosting ---

namespace {

struct LeafCandidate {
  double gain = 0.0;
  int feature = -1;
  double threshold = 0.0;
};

struct BuildLeaf {
  int node = -1;                    // index into the tree being built
  std::vector<std::size_t> rows;    // dataset rows reaching this leaf
  LeafCandidate best;
};

// Best split of `rows` by exact scan: candidate thresholds are midpoints
// between consecutive distinct sorted feature values, gain is the variance
// reduction in sum form. Ties break toward (lowest feature, lowest
// threshold).
LeafCandidate best_split(const Eigen::MatrixXd& x,
                         const std::vector<double>& residuals,
                         const std::vector<std::size_t>& rows,
                         std::size_t min_samples_leaf) {
  LeafCandidate best;
  const std::size_t n = rows.size();
  if (n < 2 * min_samples_leaf) return best;

  double total_sum = 0.0;
  for (std::size_t r : rows) total_sum += residuals[r];
  const double parent_score = total_sum * total_sum / static_cast<double>(n);

  std::vector<std::pair<double, double>> ordered(n);  // (feature value, residual)
  for (int feature = 0; feature < x.cols(); ++feature) {
    for (std::size_t i = 0; i < n; ++i) {
      ordered[i] = {x(rows[i], feature), residuals[rows[i]]};
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    double left_sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      left_sum += ordered[i].second;
      if (ordered[i].first == ordered[i + 1].first) continue;
      const std::size_t left_n = i + 1;
      const std::size_t right_n = n - left_n;
      if (left_n < min_samples_leaf || right_n < min_samples_leaf) continue;
      const double right_sum = total_sum - left_sum;
      const double gain = left_sum * left_sum / static_cast<double>(left_n) +
                          right_sum * right_sum / static_cast<double>(right_n) -
                          parent_score;
      if (gain <= best.gain) continue;
      best.gain = gain;
      best.feature = feature;
      best.threshold = std::midpoint(ordered[i].first, ordered[i + 1].first);
    }
  }
  return best;
}

constexpr double kMinGain = 1e-12;

RegressionTree build_tree(const Eigen::MatrixXd& x,
                          const std::vector<double>& residuals,
                          std::size_t max_leaves,
                          std::size_t min_samples_leaf) {
  RegressionTree tree;
  const std::size_t n = static_cast<std::size_t>(x.rows());

  std::vector<BuildLeaf> leaves;
  {
    BuildLeaf root;
    root.node = 0;
    root.rows.resize(n);
    std::iota(root.rows.begin(), root.rows.end(), std::size_t{0});
    root.best = best_split(x, residuals, root.rows, min_samples_leaf);
    tree.nodes.push_back(TreeNode{});
    leaves.push_back(std::move(root));
  }

  auto leaf_mean = [&](const std::vector<std::size_t>& rows) {
    double sum = 0.0;
    for (std::size_t r : rows) sum += residuals[r];
    return sum / static_cast<double>(rows.size());
  };

  while (leaves.size() < max_leaves) {
    // Split the pending leaf with the largest gain; earlier leaves win ties.
    std::size_t pick = leaves.size();
    double pick_gain = kMinGain;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (leaves[i].best.feature >= 0 && leaves[i].best.gain > pick_gain) {
        pick = i;
        pick_gain = leaves[i].best.gain;
      }
    }
    if (pick == leaves.size()) break;

    BuildLeaf parent = std::move(leaves[pick]);
    BuildLeaf left, right;
    for (std::size_t r : parent.rows) {
      if (x(r, parent.best.feature) <= parent.best.threshold) {
        left.rows.push_back(r);
      } else {
        right.rows.push_back(r);
      }
    }
    left.node = static_cast<int>(tree.nodes.size());
    right.node = left.node + 1;
    tree.nodes.push_back(TreeNode{});
    tree.nodes.push_back(TreeNode{});

    TreeNode& split_node = tree.nodes[parent.node];
    split_node.feature = parent.best.feature;
    split_node.threshold = parent.best.threshold;
    split_node.left = left.node;
    split_node.right = right.node;

    left.best = best_split(x, residuals, left.rows, min_samples_leaf);
    right.best = best_split(x, residuals, right.rows, min_samples_leaf);
    leaves[pick] = std::move(left);
    leaves.push_back(std::move(right));
  }

  for (const BuildLeaf& leaf : leaves) {
    tree.nodes[leaf.node].value = leaf_mean(leaf.rows);
  }
  return tree;
}

}  // namespace

double RegressionTree::predict(std::span<const double> features) const {
  const TreeNode* node = &nodes[0];
  while (!node->is_leaf()) {
    const auto feature = static_cast<std::size_t>(node->feature);
    if (feature >= features.size()) {
      throw DimensionMismatchError("tree split on feature " +
                                   std::to_string(node->feature) +
                                   " beyond input size " +
                                   std::to_string(features.size()));
    }
    node = features[feature] <= node->threshold
               ? &nodes[static_cast<std::size_t>(node->left)]
               : &nodes[static_cast<std::size_t>(node->right)];
  }
  return node->value;
}

std::pair<GradientBoostedEnsemble, FitReport> fit_gbdt(
    const RegressionDataset& data, const GbdtParams& params) {
  if (params.iterations < 1) throw DataError("gbdt needs at least 1 iteration");
  if (!(params.learning_rate >= 0.0)) {
    throw DataError("gbdt learning rate must be non-negative");
  }
  if (params.max_leaves < 2) throw DataError("gbdt needs at least 2 leaves");
  if (params.min_samples_leaf < 1) {
    throw DataError("gbdt min_samples_leaf must be at least 1");
  }
  require_runs(data, 2 * params.min_samples_leaf, "gbdt fit");

  const Eigen::MatrixXd x = feature_matrix(data);
  const std::vector<double> y = data.targets();
  const std::size_t n = y.size();

  GradientBoostedEnsemble model;
  model.learning_rate = params.learning_rate;
  model.iterations = params.iterations;
  model.base_prediction =
      std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  model.trees.reserve(params.iterations);

  std::vector<double> residuals(n);
  for (std::size_t i = 0; i < n; ++i) {
    residuals[i] = y[i] - model.base_prediction;
  }

  std::vector<double> row(x.cols());
  for (std::size_t round = 0; round < params.iterations; ++round) {
    RegressionTree tree =
        build_tree(x, residuals, params.max_leaves, params.min_samples_leaf);
    for (std::size_t i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < x.cols(); ++j) {
        row[static_cast<std::size_t>(j)] = x(i, j);
      }
      residuals[i] -= params.learning_rate * tree.predict(row);
    }
    model.trees.push_back(std::move(tree));
  }

  FitReport report;
  report.residuals = residuals;
  report.training_mse = 0.0;
  for (double r : residuals) report.training_mse += r * r;
  report.training_mse /= static_cast<double>(n);
  report.seed = params.seed;
  return {std::move(model), std::move(report)};
}

double predict(const LinearModel& model, const Mixture& mixture) {
  if (mixture.size() != model.coefficients.size()) {
    throw DimensionMismatchError(
        "mixture has " + std::to_string(mixture.size()) +
        " weights, model expects " + std::to_string(model.coefficients.size()));
  }
  double value = model.intercept;
  for (std::size_t i = 0; i < mixture.size(); ++i) {
    value += model.coefficients[i] * mixture[i];
  }
  return value;
}

double predict(const GradientBoostedEnsemble& model, const Mixture& mixture) {
  double sum = 0.0;
  for (const auto& tree : model.trees) {
    sum += tree.predict(mixture.weights());
  }
  return model.base_prediction + model.learning_rate * sum;
}

double predict(const Regressor& model, const Mixture& mixture) {
  return std::visit([&](const auto& m) { return predict(m, mixture); }, model);
}

std::size_t model_dimension(const Regressor& model) {
  if (const auto* linear = std::get_if<LinearModel>(&model)) {
    return linear->coefficients.size();
  }
  const auto& ensemble = std::get<GradientBoostedEnsemble>(model);
  int max_feature = -1;
  for (const auto& tree : ensemble.trees) {
    for (const auto& node : tree.nodes) {
      if (!node.is_leaf()) max_feature = std::max(max_feature, node.feature);
    }
  }
  return static_cast<std::size_t>(max_feature + 1);
}

}  // namespace datamix

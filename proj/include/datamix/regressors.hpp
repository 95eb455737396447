#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "datamix/domain.hpp"

namespace datamix {

/// Ridge-regularized linear surrogate: y ~ intercept + coefficients . x.
struct LinearModel {
  double intercept = 0.0;
  std::vector<double> coefficients;
  double penalty = 0.0;

  bool operator==(const LinearModel&) const = default;
};

/// Binary regression-tree node. Interior nodes route x[feature] <= threshold
/// to `left`, otherwise `right`; leaves carry the fitted value.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;

  bool is_leaf() const { return feature < 0; }
  bool operator==(const TreeNode&) const = default;
};

struct RegressionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  double predict(std::span<const double> features) const;
  bool operator==(const RegressionTree&) const = default;
};

/// Additive tree ensemble fit by squared-error boosting:
/// prediction = base_prediction + learning_rate * sum of tree outputs.
struct GradientBoostedEnsemble {
  double base_prediction = 0.0;
  std::vector<RegressionTree> trees;
  double learning_rate = 0.0;
  std::size_t iterations = 0;

  bool operator==(const GradientBoostedEnsemble&) const = default;
};

using Regressor = std::variant<LinearModel, GradientBoostedEnsemble>;

/// Fit diagnostics. `residuals` holds y - prediction per training run;
/// `cv_scores` maps penalty -> mean validation MSE when cross-validation ran.
struct FitReport {
  double training_mse = 0.0;
  std::vector<double> residuals;
  std::map<double, double> cv_scores;
  std::uint64_t seed = 0;
};

struct RidgeOptions {
  /// With penalty 0 and rank-deficient features, throw SingularSystemError
  /// instead of falling back to the minimum-norm solution.
  bool strict_singular = false;
};

struct GbdtParams {
  std::size_t iterations = 1000;
  double learning_rate = 1e-2;
  std::size_t max_leaves = 31;
  std::size_t min_samples_leaf = 20;
  std::uint64_t seed = 0;
};

/// Penalty grid searched by default during cross-validation.
inline constexpr std::array<double, 7> kDefaultPenaltyGrid{
    1e-3, 1e-2, 1e-1, 1e0, 1e1, 1e2, 1e3};

/// Minimizes sum (y - w0 - w.x)^2 + penalty * |w|^2 with the intercept left
/// unpenalized (solved on centered data). Features are not standardized.
std::pair<LinearModel, FitReport> fit_ridge(const RegressionDataset& data,
                                            double penalty,
                                            const RidgeOptions& options = {});

/// Seeded shuffle into `folds` contiguous folds, picks the grid penalty with
/// the smallest mean validation MSE (ties go to the smaller penalty), then
/// refits on all data.
std::pair<LinearModel, FitReport> fit_ridge_cv(
    const RegressionDataset& data,
    std::span<const double> penalty_grid = kDefaultPenaltyGrid,
    std::size_t folds = 5, std::uint64_t seed = 0);

/// Squared-error gradient boosting with exact greedy leaf-wise tree growth.
/// Split candidates are midpoints between consecutive sorted unique feature
/// values; gain ties break toward the lowest feature index, then the lowest
/// threshold. Deterministic for a fixed input order.
std::pair<GradientBoostedEnsemble, FitReport> fit_gbdt(
    const RegressionDataset& data, const GbdtParams& params = {});

double predict(const LinearModel& model, const Mixture& mixture);
double predict(const GradientBoostedEnsemble& model, const Mixture& mixture);
double predict(const Regressor& model, const Mixture& mixture);

/// Feature-space dimension the model was fitted on.
std::size_t model_dimension(const Regressor& model);

}  // namespace datamix

// Test-only reference implementations, deliberately independent of the
// library code paths they check.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace oracles {

// Penalized least-squares objective: sum (y - w0 - w.x)^2 + penalty * |w|^2.
inline double ridge_objective(std::span<const std::vector<double>> x,
                              std::span<const double> y, double intercept,
                              std::span<const double> coefficients,
                              double penalty) {
  double value = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double fit = intercept;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
      fit += coefficients[j] * x[i][j];
    }
    const double r = y[i] - fit;
    value += r * r;
  }
  for (double c : coefficients) value += penalty * c * c;
  return value;
}

struct GdResult {
  double intercept = 0.0;
  std::vector<double> coefficients;
  double objective = 0.0;
};

// Nesterov-accelerated gradient descent on the penalized objective; step
// size from a Frobenius-norm Lipschitz bound. Slow and simple on purpose.
inline GdResult ridge_gradient_descent(std::span<const std::vector<double>> x,
                                       std::span<const double> y,
                                       double penalty,
                                       std::size_t max_iterations = 200000,
                                       double gradient_tolerance = 1e-12) {
  const std::size_t n = x.size();
  const std::size_t d = x.empty() ? 0 : x[0].size();

  // Augmented parameter vector: w[0] is the intercept (unpenalized).
  std::vector<double> w(d + 1, 0.0), v(d + 1, 0.0), grad(d + 1, 0.0);

  auto gradient = [&](const std::vector<double>& p, std::vector<double>& g) {
    std::fill(g.begin(), g.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double fit = p[0];
      for (std::size_t j = 0; j < d; ++j) fit += p[j + 1] * x[i][j];
      const double r = fit - y[i];
      g[0] += 2.0 * r;
      for (std::size_t j = 0; j < d; ++j) g[j + 1] += 2.0 * r * x[i][j];
    }
    for (std::size_t j = 0; j < d; ++j) g[j + 1] += 2.0 * penalty * p[j + 1];
  };

  // Lipschitz bound via the Frobenius norm of the augmented design.
  double frob = static_cast<double>(n);  // intercept column of ones
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) frob += x[i][j] * x[i][j];
  }
  const double step = 1.0 / (2.0 * (frob + penalty) + 1e-12);

  double momentum = 0.0;
  std::vector<double> w_prev = w;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    gradient(v, grad);
    double grad_norm = 0.0;
    for (double g : grad) grad_norm += g * g;
    if (std::sqrt(grad_norm) < gradient_tolerance) break;

    w_prev = w;
    for (std::size_t j = 0; j <= d; ++j) w[j] = v[j] - step * grad[j];
    const double next_momentum =
        0.5 * (1.0 + std::sqrt(1.0 + 4.0 * momentum * momentum));
    const double blend = (momentum - 1.0) / next_momentum;
    for (std::size_t j = 0; j <= d; ++j) {
      v[j] = w[j] + blend * (w[j] - w_prev[j]);
    }
    momentum = next_momentum;
  }

  GdResult result;
  result.intercept = w[0];
  result.coefficients.assign(w.begin() + 1, w.end());
  result.objective =
      ridge_objective(x, y, result.intercept, result.coefficients, penalty);
  return result;
}

// Definitional Pearson correlation via raw sums.
inline bool brute_pearson(std::span<const double> x, std::span<const double> y,
                          double& out) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
    sxy += x[i] * y[i];
  }
  const double nn = static_cast<double>(n);
  const double cov = sxy / nn - (sx / nn) * (sy / nn);
  const double vx = sxx / nn - (sx / nn) * (sx / nn);
  const double vy = syy / nn - (sy / nn) * (sy / nn);
  if (vx <= 0.0 || vy <= 0.0) return false;
  out = cov / std::sqrt(vx * vy);
  return true;
}

// O(n^2) average ranks: rank_i = (# smaller) + ((# equal) + 1) / 2.
inline std::vector<double> brute_ranks(std::span<const double> values) {
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::size_t smaller = 0, equal = 0;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (values[j] < values[i]) ++smaller;
      if (values[j] == values[i]) ++equal;
    }
    ranks[i] = static_cast<double>(smaller) +
               (static_cast<double>(equal) + 1.0) / 2.0;
  }
  return ranks;
}

inline bool brute_spearman(std::span<const double> x,
                           std::span<const double> y, double& out) {
  const auto rx = brute_ranks(x);
  const auto ry = brute_ranks(y);
  return brute_pearson(rx, ry, out);
}

inline double brute_mse(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += (a[i] - b[i]) * (a[i] - b[i]);
  }
  return sum / static_cast<double>(a.size());
}

// Dirichlet mean estimate using the standard-library gamma distribution as
// an independent sampling route.
inline std::vector<double> independent_dirichlet_mean(
    std::span<const double> alpha, std::size_t draws, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<double> mean(alpha.size(), 0.0);
  std::vector<double> g(alpha.size());
  for (std::size_t it = 0; it < draws; ++it) {
    double sum = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      std::gamma_distribution<double> dist(alpha[i], 1.0);
      g[i] = dist(rng);
      sum += g[i];
    }
    for (std::size_t i = 0; i < alpha.size(); ++i) mean[i] += g[i] / sum;
  }
  for (double& m : mean) m /= static_cast<double>(draws);
  return mean;
}

}  // namespace oracles

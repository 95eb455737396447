#include "datamix/domain.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <numeric>
#include <unordered_set>

namespace datamix {

namespace {

// Inclusive tolerance guard: published sums can land exactly on the bound
// and float summation noise must not tip them over.
constexpr double kToleranceSlack = 1e-9;

}  // namespace

DomainCatalog::DomainCatalog(std::vector<DomainInfo> domains)
    : domains_(std::move(domains)) {
  if (domains_.size() < 2) {
    throw DataError("catalog needs at least 2 domains, got " +
                    std::to_string(domains_.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& d : domains_) {
    if (d.name.empty()) throw DataError("catalog domain with empty name");
    if (!seen.insert(d.name).second) {
      throw DataError("duplicate catalog domain: " + d.name);
    }
    total_tokens_ += d.available_tokens;
  }
}

std::optional<std::size_t> DomainCatalog::index_of(
    std::string_view name) const {
  for (std::size_t i = 0; i < domains_.size(); ++i) {
    if (domains_[i].name == name) return i;
  }
  return std::nullopt;
}

Mixture Mixture::validated(std::vector<double> weights, double tolerance) {
  if (weights.empty()) throw InvalidMixtureError("mixture with no weights");
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!std::isfinite(w)) {
      throw InvalidMixtureError("non-finite weight at index " +
                                std::to_string(i));
    }
    if (w < 0.0 || w > 1.0) {
      throw InvalidMixtureError("weight " + std::to_string(w) + " at index " +
                                std::to_string(i) + " outside [0, 1]");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > tolerance + kToleranceSlack) {
    throw InvalidMixtureError("weights sum to " + std::to_string(sum) +
                              ", outside tolerance " +
                              std::to_string(tolerance));
  }
  return Mixture(std::move(weights));
}

Mixture normalize(std::span<const double> raw_weights) {
  if (raw_weights.empty()) throw InvalidMixtureError("empty weight vector");
  double sum = 0.0;
  bool any_positive = false;
  for (std::size_t i = 0; i < raw_weights.size(); ++i) {
    const double w = raw_weights[i];
    if (!std::isfinite(w)) {
      throw NonFiniteError("non-finite raw weight at index " +
                           std::to_string(i));
    }
    if (w < 0.0) {
      throw NegativeWeightError("negative raw weight at index " +
                                std::to_string(i));
    }
    if (w > 0.0) any_positive = true;
    sum += w;
  }
  if (!any_positive) throw AllZeroError();

  std::vector<double> weights(raw_weights.begin(), raw_weights.end());
  for (double& w : weights) w /= sum;
  return Mixture::validated(std::move(weights));
}

std::vector<std::uint64_t> allocate_tokens(const Mixture& mixture,
                                           std::uint64_t budget) {
  if (budget == 0) throw DataError("token budget must be positive");
  // Re-check strict validity: allocation is only meaningful on the simplex.
  Mixture::validated(mixture.weights());

  const std::size_t n = mixture.size();
  std::vector<std::uint64_t> counts(n);
  std::vector<long double> fractions(n);
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long double exact =
        static_cast<long double>(mixture[i]) * static_cast<long double>(budget);
    const long double base = std::floor(exact);
    counts[i] = static_cast<std::uint64_t>(base);
    fractions[i] = exact - base;
    assigned += counts[i];
  }

  // Largest-remainder distribution of the leftover; ties by domain order.
  std::vector<std::size_t> by_fraction(n);
  std::iota(by_fraction.begin(), by_fraction.end(), std::size_t{0});
  std::stable_sort(by_fraction.begin(), by_fraction.end(),
                   [&](std::size_t a, std::size_t b) {
                     return fractions[a] > fractions[b];
                   });
  if (assigned <= budget) {
    std::uint64_t remainder = budget - assigned;
    // Normally remainder < n; extra rounds only happen when the weight sum
    // strays from 1 at the tolerance limit with a huge budget.
    for (std::size_t pos = 0; remainder > 0; pos = (pos + 1) % n) {
      counts[by_fraction[pos]] += 1;
      --remainder;
    }
  } else {
    std::uint64_t excess = assigned - budget;
    for (std::size_t pos = n; excess > 0;) {
      pos = (pos == 0) ? n - 1 : pos - 1;  // smallest fractions first
      if (counts[by_fraction[pos]] > 0) {
        counts[by_fraction[pos]] -= 1;
        --excess;
      }
    }
  }
  return counts;
}

RegressionDataset::RegressionDataset(DomainCatalog catalog,
                                     std::vector<TrainingRun> runs,
                                     std::string target_metric)
    : catalog_(std::move(catalog)),
      runs_(std::move(runs)),
      target_metric_(std::move(target_metric)) {
  if (target_metric_.empty()) throw DataError("empty target metric name");
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    const auto& run = runs_[i];
    if (run.mixture.size() != catalog_.size()) {
      throw DimensionMismatchError(
          "run " + std::to_string(i) + " has " +
          std::to_string(run.mixture.size()) + " weights for a " +
          std::to_string(catalog_.size()) + "-domain catalog");
    }
    if (run.metrics.empty()) {
      throw DataError("run " + std::to_string(i) + " has no metrics");
    }
    for (const auto& [name, value] : run.metrics) {
      if (!std::isfinite(value)) {
        throw NonFiniteError("non-finite metric '" + name + "' in run " +
                             std::to_string(i));
      }
    }
    if (!run.metrics.contains(target_metric_)) {
      throw MissingTargetMetricError("run " + std::to_string(i) +
                                     " is missing target metric '" +
                                     target_metric_ + "'");
    }
  }
}

std::vector<double> RegressionDataset::targets() const {
  std::vector<double> out;
  out.reserve(runs_.size());
  for (const auto& run : runs_) out.push_back(run.metrics.at(target_metric_));
  return out;
}

std::string snake_case(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  bool pending_sep = false;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      if (pending_sep && !out.empty()) out.push_back('_');
      pending_sep = false;
      out.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else {
      pending_sep = true;
    }
  }
  return out;
}

}  // namespace datamix

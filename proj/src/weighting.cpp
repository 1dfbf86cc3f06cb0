#include "pcm/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pcm {

namespace {

std::vector<double> log_row_means(const PairwiseComparisonMatrix& A) {
  const int n = A.size();
  std::vector<double> lm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += A.log_entry(i, j);
    lm[static_cast<std::size_t>(i)] = sum / n;
  }
  return lm;
}

void multiply(const PairwiseComparisonMatrix& A, const std::vector<double>& x,
              std::vector<double>& out) {
  const int n = A.size();
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += A.entry(i, j) * x[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = sum;
  }
}

}  // namespace

std::vector<double> row_geometric_means(const PairwiseComparisonMatrix& A) {
  std::vector<double> p = log_row_means(A);
  for (double& v : p) v = std::exp(v);
  return p;
}

WeightVector llsm_weights(const PairwiseComparisonMatrix& A) {
  std::vector<double> lm = log_row_means(A);
  const double shift = *std::max_element(lm.begin(), lm.end());
  for (double& v : lm) v = std::exp(v - shift);
  return WeightVector::normalized(std::move(lm));
}

void EmConfig::validate() const {
  if (!(convergence_tol > 0.0) || !std::isfinite(convergence_tol)) {
    throw std::invalid_argument("convergence_tol must be positive and finite");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be at least 1");
  }
}

EmResult em_weights(const PairwiseComparisonMatrix& A, const EmConfig& cfg) {
  cfg.validate();
  const int n = A.size();
  std::vector<double> w(static_cast<std::size_t>(n), 1.0 / n);
  std::vector<double> next(static_cast<std::size_t>(n));
  for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
    multiply(A, w, next);
    const double sum = std::accumulate(next.begin(), next.end(), 0.0);
    for (double& v : next) v /= sum;
    const double delta = max_abs_diff(next, w);
    w.swap(next);
    if (delta <= cfg.convergence_tol) {
      multiply(A, w, next);
      const double lambda = std::accumulate(next.begin(), next.end(), 0.0);
      return EmResult{WeightVector::normalized(std::move(w)), lambda, iter};
    }
  }
  throw NoConvergenceError("power iteration did not converge within " +
                           std::to_string(cfg.max_iterations) + " iterations");
}

WeightVector flat_weights(const PairwiseComparisonMatrix& A) {
  return WeightVector::normalized(
      std::vector<double>(static_cast<std::size_t>(A.size()), 1.0));
}

WeightingMethod llsm_method() {
  return WeightingMethod("llsm", [](const PairwiseComparisonMatrix& A) {
    return llsm_weights(A);
  });
}

WeightingMethod em_method(EmConfig cfg) {
  return WeightingMethod("em", [cfg](const PairwiseComparisonMatrix& A) {
    return em_weights(A, cfg).weights;
  });
}

WeightingMethod flat_method() {
  return WeightingMethod("flat", [](const PairwiseComparisonMatrix& A) {
    return flat_weights(A);
  });
}

std::optional<WeightingMethod> method_by_name(std::string_view name,
                                              EmConfig em_cfg) {
  if (name == "llsm") return llsm_method();
  if (name == "em") return em_method(em_cfg);
  if (name == "flat") return flat_method();
  return std::nullopt;
}

}  // namespace pcm

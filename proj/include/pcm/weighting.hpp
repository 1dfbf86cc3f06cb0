#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "pcm/matrix.hpp"

namespace pcm {

/// Geometric mean of each row, computed via the stored log entries. The
/// product of the means is 1 by reciprocity.
std::vector<double> row_geometric_means(const PairwiseComparisonMatrix& A);

/// Row geometric means normalized to sum 1; the minimizer of the sum of
/// squared log residuals between judgments and weight ratios. All arithmetic
/// runs in log space so extreme ratios neither overflow nor underflow.
WeightVector llsm_weights(const PairwiseComparisonMatrix& A);

struct EmConfig {
  double convergence_tol = 1e-12;  // max-norm change between normalized iterates
  int max_iterations = 10000;

  void validate() const;
};

struct EmResult {
  WeightVector weights;
  double lambda_max;  // principal-eigenvalue estimate, >= n for reciprocal input
  int iterations;
};

/// Principal eigenvector by power iteration from the uniform vector; each step
/// multiplies by A and renormalizes to sum 1. lambda_max is sum(A * w) at the
/// returned iterate. Throws NoConvergenceError when the iteration cap is hit.
EmResult em_weights(const PairwiseComparisonMatrix& A, const EmConfig& cfg = {});

/// The constant method: 1/n for every alternative.
WeightVector flat_weights(const PairwiseComparisonMatrix& A);

/// A named evaluator from matrices to weight vectors. The axiom checkers
/// accept any instance, so user-supplied methods are treated exactly like the
/// built-ins.
class WeightingMethod {
 public:
  using Evaluator = std::function<WeightVector(const PairwiseComparisonMatrix&)>;

  WeightingMethod(std::string name, Evaluator evaluate)
      : name_(std::move(name)), evaluate_(std::move(evaluate)) {}

  const std::string& name() const { return name_; }
  WeightVector operator()(const PairwiseComparisonMatrix& A) const {
    return evaluate_(A);
  }

 private:
  std::string name_;
  Evaluator evaluate_;
};

WeightingMethod llsm_method();
WeightingMethod em_method(EmConfig cfg = {});
WeightingMethod flat_method();

/// Lookup for "llsm" | "em" | "flat"; empty for anything else.
std::optional<WeightingMethod> method_by_name(std::string_view name,
                                              EmConfig em_cfg = {});

}  // namespace pcm

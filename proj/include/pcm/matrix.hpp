#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcm {

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSquareError : Error {
  using Error::Error;
};

struct WrongLengthError : Error {
  using Error::Error;
};

struct NonPositiveEntryError : Error {
  NonPositiveEntryError(int row, int col, double value);
  int row;  // 0-based
  int col;
  double value;
};

struct ReciprocityViolationError : Error {
  ReciprocityViolationError(int row, int col, double product);
  int row;  // 0-based, worst offending pair
  int col;
  double product;  // a(row,col) * a(col,row)
};

struct InvalidTriadError : Error {
  using Error::Error;
};

struct NonPositiveAlphaError : Error {
  using Error::Error;
};

struct NoConvergenceError : Error {
  using Error::Error;
};

struct TooSmallError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Tolerances

struct ToleranceConfig {
  double reciprocity_tol = 1e-9;  // bound on |a(i,j) * a(j,i) - 1|
  double consistency_tol = 1e-9;  // bound on log-space triad residuals
  double weight_tol = 1e-9;       // max-norm bound between weight vectors

  void validate() const;  // throws std::invalid_argument unless all in (0, 1)
};

// ---------------------------------------------------------------------------
// Weight vector

/// Positive priority vector normalized to sum 1.
class WeightVector {
 public:
  static constexpr double kNormalizationTol = 1e-9;

  /// Requires strictly positive components summing to 1 within kNormalizationTol.
  explicit WeightVector(std::vector<double> weights);

  /// Scales a strictly positive vector to sum 1.
  static WeightVector normalized(std::vector<double> raw);

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](int i) const { return w_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& values() const { return w_; }

  bool operator==(const WeightVector&) const = default;

 private:
  std::vector<double> w_;
};

// ---------------------------------------------------------------------------
// Triads

/// Three distinct alternative indices. 0-based here; 1-based in files and CLI.
struct Triad {
  int i = 0;
  int j = 0;
  int k = 0;
};

/// Throws InvalidTriadError unless the indices are distinct and in [0, n).
void validate_triad(const Triad& t, int n);

struct TriadTransform;  // transform.hpp

// ---------------------------------------------------------------------------
// Pairwise comparison matrix

/// Positive reciprocal n x n judgment matrix. Entry (i,j) is the judged
/// importance of alternative i over j; the lower triangle holds reciprocals.
/// Entries are kept in linear and natural-log form, both fixed at construction;
/// instances are immutable and safe to share across threads.
class PairwiseComparisonMatrix {
 public:
  int size() const { return n_; }
  double entry(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }
  double log_entry(int i, int j) const {
    return logs_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<double>& entries() const { return entries_; }  // row-major

  bool operator==(const PairwiseComparisonMatrix&) const = default;

 private:
  PairwiseComparisonMatrix(int n, std::vector<double> entries);

  int n_ = 0;
  std::vector<double> entries_;
  std::vector<double> logs_;

  friend PairwiseComparisonMatrix build_matrix(
      const std::vector<std::vector<double>>& raw, const ToleranceConfig& tol);
  friend PairwiseComparisonMatrix build_from_upper_triangle(
      std::span<const double> upper, int n, const ToleranceConfig& tol);
  friend PairwiseComparisonMatrix consistent_from_weights(const WeightVector& w);
  friend PairwiseComparisonMatrix random_matrix(int n, double perturbation,
                                                std::uint64_t seed);
  friend PairwiseComparisonMatrix apply_triad_transform(
      const PairwiseComparisonMatrix& A, const TriadTransform& t);
};

/// Validates a full grid of judgments. Entries are taken as given, no
/// symmetrization; reciprocity and unit diagonal are checked within
/// tol.reciprocity_tol.
PairwiseComparisonMatrix build_matrix(const std::vector<std::vector<double>>& raw,
                                      const ToleranceConfig& tol = {});

/// Builds from the n(n-1)/2 above-diagonal entries in row-major order. The
/// diagonal is set to 1 and the lower triangle to exact reciprocals.
PairwiseComparisonMatrix build_from_upper_triangle(std::span<const double> upper,
                                                   int n,
                                                   const ToleranceConfig& tol = {});

/// The consistent matrix induced by a weight vector: a(i,j) = w_i / w_j.
PairwiseComparisonMatrix consistent_from_weights(const WeightVector& w);

/// Draws a positive weight vector, builds its consistent matrix, and scales
/// each above-diagonal entry by exp(u) with u uniform on
/// [-perturbation, perturbation]; reciprocity is restored exactly.
/// Deterministic for a fixed seed.
PairwiseComparisonMatrix random_matrix(int n, double perturbation,
                                       std::uint64_t seed);

// ---------------------------------------------------------------------------
// Consistency

struct ConsistencyCheck {
  bool consistent = true;
  double max_residual = 0.0;    // max |log a(i,j) + log a(j,k) - log a(i,k)|
  std::optional<Triad> worst;   // a maximizing triad; empty when n == 2
};

/// Tests a(i,k) = a(i,j) * a(j,k) over all ordered triads, in log space.
ConsistencyCheck is_consistent(const PairwiseComparisonMatrix& A,
                               const ToleranceConfig& tol = {});

// ---------------------------------------------------------------------------
// Small numeric helpers shared by the weighting and axiom modules.

double max_abs_diff(std::span<const double> a, std::span<const double> b);

}  // namespace pcm

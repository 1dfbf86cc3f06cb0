#include "pcm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pcm/detail/rng.hpp"

namespace pcm {

namespace {

std::string cell(int i, int j) {
  // 1-based in every message
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void require_positive(double v, int i, int j) {
  if (!positive_finite(v)) throw NonPositiveEntryError(i, j, v);
}

}  // namespace

NonPositiveEntryError::NonPositiveEntryError(int row, int col, double value)
    : Error("entry " + cell(row, col) + " must be positive and finite, got " +
            std::to_string(value)),
      row(row),
      col(col),
      value(value) {}

ReciprocityViolationError::ReciprocityViolationError(int row, int col,
                                                     double product)
    : Error("reciprocity violated at " + cell(row, col) + ": a" +
            cell(row, col) + " * a" + cell(col, row) + " = " +
            std::to_string(product)),
      row(row),
      col(col),
      product(product) {}

void ToleranceConfig::validate() const {
  for (double t : {reciprocity_tol, consistency_tol, weight_tol}) {
    if (!(t > 0.0) || !(t < 1.0)) {
      throw std::invalid_argument("tolerances must lie strictly between 0 and 1");
    }
  }
}

// ---------------------------------------------------------------------------
// WeightVector

WeightVector::WeightVector(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw std::invalid_argument("weight vector must be non-empty");
  double sum = 0.0;
  for (double v : w_) {
    if (!positive_finite(v)) {
      throw std::invalid_argument("weights must be positive and finite");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kNormalizationTol) {
    throw std::invalid_argument("weights must sum to 1, got " +
                                std::to_string(sum));
  }
}

WeightVector WeightVector::normalized(std::vector<double> raw) {
  if (raw.empty()) throw std::invalid_argument("weight vector must be non-empty");
  double sum = 0.0;
  for (double v : raw) {
    if (!positive_finite(v)) {
      throw std::invalid_argument("weights must be positive and finite");
    }
    sum += v;
  }
  for (double& v : raw) v /= sum;
  return WeightVector(std::move(raw));
}

// ---------------------------------------------------------------------------
// Triad

void validate_triad(const Triad& t, int n) {
  const bool in_range = t.i >= 0 && t.i < n && t.j >= 0 && t.j < n && t.k >= 0 &&
                        t.k < n;
  const bool distinct = t.i != t.j && t.j != t.k && t.i != t.k;
  if (!in_range || !distinct) {
    std::ostringstream os;
    os << "triad (" << t.i + 1 << "," << t.j + 1 << "," << t.k + 1
       << ") must name three distinct alternatives in [1," << n << "]";
    throw InvalidTriadError(os.str());
  }
}

// ---------------------------------------------------------------------------
// PairwiseComparisonMatrix

PairwiseComparisonMatrix::PairwiseComparisonMatrix(int n,
                                                   std::vector<double> entries)
    : n_(n), entries_(std::move(entries)), logs_(entries_.size()) {
  std::transform(entries_.begin(), entries_.end(), logs_.begin(),
                 [](double v) { return std::log(v); });
}

PairwiseComparisonMatrix build_matrix(const std::vector<std::vector<double>>& raw,
                                      const ToleranceConfig& tol) {
  tol.validate();
  const int n = static_cast<int>(raw.size());
  if (n < 2) throw NotSquareError("matrix must be at least 2x2");
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw[i].size()) != n) {
      std::ostringstream os;
      os << "matrix is not square: row " << i + 1 << " has " << raw[i].size()
         << " entries, expected " << n;
      throw NotSquareError(os.str());
    }
    for (int j = 0; j < n; ++j) {
      require_positive(raw[i][j], i, j);
      entries.push_back(raw[i][j]);
    }
  }

  // Worst offender over the diagonal and all unordered pairs.
  double worst_dev = 0.0;
  int worst_i = -1, worst_j = -1;
  auto at = [&](int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    const double diag_dev = std::abs(at(i, i) - 1.0);
    if (diag_dev > tol.reciprocity_tol && diag_dev > worst_dev) {
      worst_dev = diag_dev;
      worst_i = worst_j = i;
    }
    for (int j = i + 1; j < n; ++j) {
      const double dev = std::abs(at(i, j) * at(j, i) - 1.0);
      if (dev > tol.reciprocity_tol && dev > worst_dev) {
        worst_dev = dev;
        worst_i = i;
        worst_j = j;
      }
    }
  }
  if (worst_i >= 0) {
    throw ReciprocityViolationError(worst_i, worst_j,
                                    at(worst_i, worst_j) * at(worst_j, worst_i));
  }
  return PairwiseComparisonMatrix(n, std::move(entries));
}

PairwiseComparisonMatrix build_from_upper_triangle(std::span<const double> upper,
                                                   int n,
                                                   const ToleranceConfig& tol) {
  tol.validate();
  if (n < 2) throw WrongLengthError("matrix must be at least 2x2");
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (upper.size() != expected) {
    std::ostringstream os;
    os << "upper triangle for n=" << n << " needs " << expected
       << " entries, got " << upper.size();
    throw WrongLengthError(os.str());
  }
  std::vector<double> entries(static_cast<std::size_t>(n) * n, 1.0);
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++pos) {
      require_positive(upper[pos], i, j);
      entries[static_cast<std::size_t>(i) * n + j] = upper[pos];
      entries[static_cast<std::size_t>(j) * n + i] = 1.0 / upper[pos];
    }
  }
  return PairwiseComparisonMatrix(n, std::move(entries));
}

PairwiseComparisonMatrix consistent_from_weights(const WeightVector& w) {
  const int n = w.size();
  if (n < 2) throw WrongLengthError("need at least 2 weights to induce a matrix");
  std::vector<double> entries(static_cast<std::size_t>(n) * n, 1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double ratio = w[i] / w[j];
      entries[static_cast<std::size_t>(i) * n + j] = ratio;
      entries[static_cast<std::size_t>(j) * n + i] = 1.0 / ratio;
    }
  }
  return PairwiseComparisonMatrix(n, std::move(entries));
}

PairwiseComparisonMatrix random_matrix(int n, double perturbation,
                                       std::uint64_t seed) {
  if (n < 2) throw NotSquareError("matrix must be at least 2x2");
  if (!(perturbation >= 0.0) || !std::isfinite(perturbation)) {
    throw std::invalid_argument("perturbation must be finite and >= 0");
  }
  std::mt19937_64 gen(seed);
  std::vector<double> raw(static_cast<std::size_t>(n));
  for (double& v : raw) v = std::exp(detail::uniform(gen, -2.0, 2.0));
  auto base = consistent_from_weights(WeightVector::normalized(std::move(raw)));

  std::vector<double> entries = base.entries();
  if (perturbation > 0.0) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double factor =
            std::exp(detail::uniform(gen, -perturbation, perturbation));
        double& upper = entries[static_cast<std::size_t>(i) * n + j];
        upper *= factor;
        entries[static_cast<std::size_t>(j) * n + i] = 1.0 / upper;
      }
    }
  }
  return PairwiseComparisonMatrix(n, std::move(entries));
}

// ---------------------------------------------------------------------------
// Consistency

ConsistencyCheck is_consistent(const PairwiseComparisonMatrix& A,
                               const ToleranceConfig& tol) {
  tol.validate();
  const int n = A.size();
  ConsistencyCheck result;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double residual =
            std::abs(A.log_entry(i, j) + A.log_entry(j, k) - A.log_entry(i, k));
        if (residual > result.max_residual) {
          result.max_residual = residual;
          result.worst = Triad{i, j, k};
        }
      }
    }
  }
  result.consistent = result.max_residual <= tol.consistency_tol;
  return result;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("vectors must have equal length");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace pcm

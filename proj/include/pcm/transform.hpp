#pragma once

#include <utility>
#include <vector>

#include "pcm/matrix.hpp"

namespace pcm {

/// One rescaling of the 3-cycle determined by a triad.
struct TriadTransform {
  Triad triad;
  double alpha = 1.0;
};

/// With (i,j,k) = t.triad, scales a(i,j), a(j,k), a(k,i) by t.alpha, sets the
/// three reciprocal cells to exact inverses, and leaves every other entry
/// untouched.
PairwiseComparisonMatrix apply_triad_transform(const PairwiseComparisonMatrix& A,
                                               const TriadTransform& t);

/// alpha = cbrt(a(i,k) / (a(i,j) * a(j,k))); the unique choice that makes the
/// triad locally consistent, a(i,j) * a(j,k) = a(i,k), after the transform.
double local_consistency_alpha(const PairwiseComparisonMatrix& A,
                               const Triad& triad);

/// Steps whose alpha lies within this distance of 1 are recorded in a trace
/// but leave the working matrix untouched.
inline constexpr double kIdentityAlphaTol = 1e-12;

struct ConsistificationStep {
  TriadTransform transform;
  PairwiseComparisonMatrix result;
};

/// Full record of one consistification run: the input, every transform with
/// the matrix it produced, and the sequence of above-diagonal target entries
/// each step pinned. Immutable once returned.
struct ConsistificationTrace {
  PairwiseComparisonMatrix initial;
  std::vector<ConsistificationStep> steps;
  std::vector<std::pair<int, int>> target_order;  // 0-based (row, col), row < col

  const PairwiseComparisonMatrix& final_matrix() const {
    return steps.empty() ? initial : steps.back().result;
  }
};

/// Applies one recorded step the way consistify does: near-identity alphas
/// (kIdentityAlphaTol) return the input unchanged. Replaying a trace's steps
/// from its initial matrix reproduces every intermediate bit for bit.
PairwiseComparisonMatrix replay_step(const PairwiseComparisonMatrix& current,
                                     const TriadTransform& t);

/// Converts any matrix (n >= 3) into a consistent one with at most
/// (n-1)(n-2)/2 triad transforms, every triad containing alternative 1.
/// Targets (k,l), 2 <= k < l <= n in 1-based terms, are visited in the order
/// (n-1,n), (n-2,n), (n-2,n-1), ..., (2,n), ..., (2,3); each step applies
/// alpha = P_k / (P_l * a(k,l)) on triad (1,k,l), where P holds the row
/// geometric means of the INPUT matrix (they are invariant along the
/// sequence) and a(k,l) is read from the current matrix. The final matrix
/// equals the consistent matrix induced by the input's normalized row
/// geometric means.
ConsistificationTrace consistify(const PairwiseComparisonMatrix& A);

}  // namespace pcm

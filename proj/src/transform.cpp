#include "pcm/transform.hpp"

#include <cmath>

#include "pcm/weighting.hpp"

namespace pcm {

PairwiseComparisonMatrix apply_triad_transform(const PairwiseComparisonMatrix& A,
                                               const TriadTransform& t) {
  const int n = A.size();
  validate_triad(t.triad, n);
  if (!(t.alpha > 0.0) || !std::isfinite(t.alpha)) {
    throw NonPositiveAlphaError("alpha must be positive and finite, got " +
                                std::to_string(t.alpha));
  }
  std::vector<double> entries = A.entries();
  auto at = [&](int i, int j) -> double& {
    return entries[static_cast<std::size_t>(i) * n + j];
  };
  const auto [i, j, k] = t.triad;
  at(i, j) *= t.alpha;
  at(j, i) = 1.0 / at(i, j);
  at(j, k) *= t.alpha;
  at(k, j) = 1.0 / at(j, k);
  at(k, i) *= t.alpha;
  at(i, k) = 1.0 / at(k, i);
  return PairwiseComparisonMatrix(n, std::move(entries));
}

double local_consistency_alpha(const PairwiseComparisonMatrix& A,
                               const Triad& triad) {
  validate_triad(triad, A.size());
  return std::cbrt(A.entry(triad.i, triad.k) /
                   (A.entry(triad.i, triad.j) * A.entry(triad.j, triad.k)));
}

PairwiseComparisonMatrix replay_step(const PairwiseComparisonMatrix& current,
                                     const TriadTransform& t) {
  if (std::abs(t.alpha - 1.0) <= kIdentityAlphaTol) return current;
  return apply_triad_transform(current, t);
}

ConsistificationTrace consistify(const PairwiseComparisonMatrix& A) {
  const int n = A.size();
  if (n < 3) {
    throw TooSmallError(
        "consistification needs n >= 3; a 2x2 reciprocal matrix is already "
        "consistent");
  }
  const std::vector<double> p = row_geometric_means(A);

  ConsistificationTrace trace{A, {}, {}};
  const std::size_t step_count = static_cast<std::size_t>(n - 1) * (n - 2) / 2;
  trace.steps.reserve(step_count);
  trace.target_order.reserve(step_count);

  const PairwiseComparisonMatrix* current = &trace.initial;
  for (int k = n - 2; k >= 1; --k) {      // 1-based target row n-1 down to 2
    for (int l = n - 1; l > k; --l) {     // 1-based target col n down to k+1
      const double alpha =
          p[static_cast<std::size_t>(k)] /
          (p[static_cast<std::size_t>(l)] * current->entry(k, l));
      const TriadTransform t{Triad{0, k, l}, alpha};
      trace.steps.push_back({t, replay_step(*current, t)});
      trace.target_order.emplace_back(k, l);
      current = &trace.steps.back().result;
    }
  }
  return trace;
}

}  // namespace pcm

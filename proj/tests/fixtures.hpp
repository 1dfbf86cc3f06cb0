#pragma once

#include "pcm/matrix.hpp"

namespace fixtures {

// 4x4 all-ones matrix with a single outlier ratio a(1,4) = 16.
inline pcm::PairwiseComparisonMatrix outlier16() {
  return pcm::build_matrix({{1, 1, 1, 16},
                            {1, 1, 1, 1},
                            {1, 1, 1, 1},
                            {1.0 / 16, 1, 1, 1}});
}

// Intermediate after rescaling the (1,3,4) cycle of outlier16 by 2.
inline pcm::PairwiseComparisonMatrix outlier16_step1() {
  return pcm::build_matrix({{1, 1, 2, 8},
                            {1, 1, 1, 1},
                            {1.0 / 2, 1, 1, 2},
                            {1.0 / 8, 1, 1.0 / 2, 1}});
}

// Consistent endpoint of outlier16; induced by weights (4,2,2,1)/9.
inline pcm::PairwiseComparisonMatrix outlier16_consistent() {
  return pcm::build_matrix({{1, 2, 2, 4},
                            {1.0 / 2, 1, 1, 2},
                            {1.0 / 2, 1, 1, 2},
                            {1.0 / 4, 1.0 / 2, 1.0 / 2, 1}});
}

// 4x4 all-ones matrix with a single outlier ratio a(1,4) = 8.
inline pcm::PairwiseComparisonMatrix outlier8() {
  return pcm::build_matrix({{1, 1, 1, 8},
                            {1, 1, 1, 1},
                            {1, 1, 1, 1},
                            {1.0 / 8, 1, 1, 1}});
}

// outlier8 after rescaling the (1,2,4) cycle by 2; the eigenvector method
// yields a visibly different weight vector here.
inline pcm::PairwiseComparisonMatrix outlier8_shifted() {
  return pcm::build_matrix({{1, 2, 1, 4},
                            {1.0 / 2, 1, 1, 2},
                            {1, 1, 1, 1},
                            {1.0 / 4, 1.0 / 2, 1, 1}});
}

}  // namespace fixtures

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "pcm/detail/rng.hpp"
#include "pcm/transform.hpp"
#include "pcm/weighting.hpp"

using namespace pcm;

TEST_SUITE_BEGIN("transform");

TEST_CASE("apply_triad_transform") {
  SUBCASE("rescaling the (1,2,4) cycle of outlier 8 by 2") {
    const auto result =
        apply_triad_transform(fixtures::outlier8(), {Triad{0, 1, 3}, 2.0});
    CHECK(result == fixtures::outlier8_shifted());
  }

  SUBCASE("rescaling the (1,3,4) cycle of outlier 16 by 2") {
    const auto result =
        apply_triad_transform(fixtures::outlier16(), {Triad{0, 2, 3}, 2.0});
    CHECK(result == fixtures::outlier16_step1());
  }

  SUBCASE("alpha 1 leaves the matrix unchanged") {
    const auto A = fixtures::outlier16();
    CHECK(apply_triad_transform(A, {Triad{1, 2, 3}, 1.0}) == A);
  }

  SUBCASE("only the triad cycle and its reciprocals change") {
    const auto A = random_matrix(6, 1.0, 3);
    const Triad t{1, 4, 2};
    const auto B = apply_triad_transform(A, {t, 3.7});
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        const bool touched = (i == t.i && j == t.j) || (i == t.j && j == t.i) ||
                             (i == t.j && j == t.k) || (i == t.k && j == t.j) ||
                             (i == t.k && j == t.i) || (i == t.i && j == t.k);
        if (touched) {
          CHECK(B.entry(i, j) != A.entry(i, j));
        } else {
          CHECK(B.entry(i, j) == A.entry(i, j));
        }
      }
    }
    CHECK(B.entry(t.i, t.j) == A.entry(t.i, t.j) * 3.7);
    CHECK(B.entry(t.j, t.k) == A.entry(t.j, t.k) * 3.7);
    CHECK(B.entry(t.k, t.i) == A.entry(t.k, t.i) * 3.7);
    // reciprocal cells are exact inverses again
    CHECK(B.entry(t.j, t.i) == 1.0 / B.entry(t.i, t.j));
    CHECK(B.entry(t.k, t.j) == 1.0 / B.entry(t.j, t.k));
    CHECK(B.entry(t.i, t.k) == 1.0 / B.entry(t.k, t.i));
  }

  SUBCASE("applying alpha then 1/alpha restores the matrix") {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 3 + trial % 4;
      const auto A = random_matrix(n, 1.0, gen());
      const Triad t{0, 1 + trial % (n - 1), n - 1 == 1 + trial % (n - 1)
                                                ? n - 2
                                                : n - 1};
      const double alpha = detail::log_uniform(gen, 0.1, 10.0);
      const auto back = apply_triad_transform(
          apply_triad_transform(A, {t, alpha}), {t, 1.0 / alpha});
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          CHECK(std::abs(back.entry(i, j) - A.entry(i, j)) <=
                1e-12 * A.entry(i, j));
        }
      }
    }
  }

  SUBCASE("invalid triads and alphas") {
    const auto A = fixtures::outlier16();
    CHECK_THROWS_AS(apply_triad_transform(A, {Triad{0, 0, 1}, 2.0}),
                    InvalidTriadError);
    CHECK_THROWS_AS(apply_triad_transform(A, {Triad{0, 1, 4}, 2.0}),
                    InvalidTriadError);
    CHECK_THROWS_AS(apply_triad_transform(A, {Triad{0, 1, 2}, 0.0}),
                    NonPositiveAlphaError);
    CHECK_THROWS_AS(apply_triad_transform(A, {Triad{0, 1, 2}, -1.5}),
                    NonPositiveAlphaError);
    CHECK_THROWS_AS(
        apply_triad_transform(A, {Triad{0, 1, 2},
                                  std::numeric_limits<double>::infinity()}),
        NonPositiveAlphaError);
  }
}

TEST_CASE("local_consistency_alpha") {
  SUBCASE("consistent triads need alpha 1") {
    CHECK(local_consistency_alpha(fixtures::outlier16(), Triad{1, 2, 3}) == 1.0);
    const auto A = consistent_from_weights(WeightVector({0.5, 0.3, 0.2}));
    CHECK(local_consistency_alpha(A, Triad{0, 1, 2}) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("outlier triad needs the cube root of the imbalance") {
    const double alpha =
        local_consistency_alpha(fixtures::outlier16(), Triad{0, 1, 3});
    CHECK(alpha == doctest::Approx(std::cbrt(16.0)).epsilon(1e-15));
    const auto after =
        apply_triad_transform(fixtures::outlier16(), {Triad{0, 1, 3}, alpha});
    CHECK(std::abs(std::log(after.entry(0, 1) * after.entry(1, 3) /
                            after.entry(0, 3))) <= 1e-12);
  }

  SUBCASE("reversing the triad inverts alpha") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 3 + trial % 4;
      const auto A = random_matrix(n, 1.3, gen());
      const Triad t{trial % n, (trial + 1) % n, (trial + 2) % n};
      const Triad reversed{t.k, t.j, t.i};
      CHECK(local_consistency_alpha(A, t) * local_consistency_alpha(A, reversed) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  SUBCASE("transforming with the local alpha repairs the triad") {
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 4 + trial % 3;
      const auto A = random_matrix(n, 1.0, gen());
      const Triad t{detail::uniform_index(gen, n - 2),
                    n - 2, n - 1};
      const double alpha = local_consistency_alpha(A, t);
      const auto B = apply_triad_transform(A, {t, alpha});
      CHECK(std::abs(std::log(B.entry(t.i, t.j) * B.entry(t.j, t.k) /
                              B.entry(t.i, t.k))) <= 1e-12);
    }
  }

  SUBCASE("invalid triad") {
    CHECK_THROWS_AS(local_consistency_alpha(fixtures::outlier16(), Triad{2, 2, 3}),
                    InvalidTriadError);
  }
}

TEST_CASE("llsm is invariant under triad transforms") {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 4;
    const auto A = random_matrix(n, 1.0, gen());
    Triad t;
    t.i = detail::uniform_index(gen, n);
    do t.j = detail::uniform_index(gen, n); while (t.j == t.i);
    do t.k = detail::uniform_index(gen, n); while (t.k == t.i || t.k == t.j);
    const double alpha = detail::log_uniform(gen, 0.1, 10.0);
    const auto B = apply_triad_transform(A, {t, alpha});

    const auto pa = row_geometric_means(A);
    const auto pb = row_geometric_means(B);
    CHECK(max_abs_diff(pa, pb) <= 1e-12);
    CHECK(max_abs_diff(llsm_weights(A).values(), llsm_weights(B).values()) <=
          1e-10);
  }
}

TEST_CASE("the eigenvector method is not invariant") {
  const auto before = em_weights(fixtures::outlier8()).weights;
  const auto after = em_weights(fixtures::outlier8_shifted()).weights;
  CHECK(max_abs_diff(before.values(), after.values()) > 0.01);
}

TEST_CASE("consistify") {
  SUBCASE("outlier 16 walk-through") {
    const auto trace = consistify(fixtures::outlier16());
    REQUIRE(trace.steps.size() == 3);
    CHECK(trace.target_order ==
          std::vector<std::pair<int, int>>{{2, 3}, {1, 3}, {1, 2}});

    CHECK(trace.steps[0].transform.alpha == 2.0);
    CHECK(trace.steps[1].transform.alpha == 2.0);
    CHECK(trace.steps[2].transform.alpha == 1.0);
    for (const auto& step : trace.steps) CHECK(step.transform.triad.i == 0);

    CHECK(trace.steps[0].result == fixtures::outlier16_step1());
    CHECK(trace.steps[1].result == fixtures::outlier16_consistent());
    CHECK(trace.steps[2].result == trace.steps[1].result);  // identity reuse
    CHECK(trace.final_matrix() == fixtures::outlier16_consistent());
    CHECK(is_consistent(trace.final_matrix()).consistent);
  }

  SUBCASE("consistent input is returned unchanged") {
    const auto A = random_matrix(5, 0.0, 21);
    const auto trace = consistify(A);
    CHECK(trace.steps.size() == 6);
    for (const auto& step : trace.steps) {
      CHECK(std::abs(step.transform.alpha - 1.0) <= kIdentityAlphaTol);
    }
    CHECK(trace.final_matrix() == A);
  }

  SUBCASE("n = 2 is rejected") {
    CHECK_THROWS_AS(consistify(build_matrix({{1, 3}, {1.0 / 3, 1}})),
                    TooSmallError);
  }

  SUBCASE("random 5x5") {
    const auto A = random_matrix(5, 1.0, 7);
    const auto trace = consistify(A);
    CHECK(trace.steps.size() == 6);  // (5-1)(5-2)/2
    CHECK(is_consistent(trace.final_matrix()).consistent);
    CHECK(max_abs_diff(llsm_weights(A).values(),
                       llsm_weights(trace.final_matrix()).values()) <= 1e-10);
  }

  SUBCASE("one non-trivial step for an inconsistent 3x3") {
    const auto A = build_matrix({{1, 2, 8}, {0.5, 1, 1}, {0.125, 1, 1}});
    const auto trace = consistify(A);
    REQUIRE(trace.steps.size() == 1);
    CHECK(std::abs(trace.steps[0].transform.alpha - 1.0) > kIdentityAlphaTol);
    CHECK(is_consistent(trace.final_matrix()).consistent);
  }

  SUBCASE("trace replay and endpoint properties") {
    std::mt19937_64 gen(555);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 3 + trial % 4;
      const auto A = random_matrix(n, 1.0, gen());
      const auto trace = consistify(A);

      const std::size_t bound = static_cast<std::size_t>(n - 1) * (n - 2) / 2;
      CHECK(trace.steps.size() <= bound);

      // replaying the recorded transforms reproduces every matrix bit for bit
      PairwiseComparisonMatrix current = trace.initial;
      const auto reference = llsm_weights(A);
      for (const auto& step : trace.steps) {
        current = replay_step(current, step.transform);
        CHECK(current == step.result);
        CHECK(max_abs_diff(llsm_weights(step.result).values(),
                           reference.values()) <= 1e-10);
      }
      CHECK(current == trace.final_matrix());

      // the endpoint is the consistent matrix induced by the llsm weights
      const auto target = consistent_from_weights(reference);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          CHECK(std::abs(trace.final_matrix().entry(i, j) - target.entry(i, j)) <=
                1e-10);
        }
      }
    }
  }
}

TEST_SUITE_END();

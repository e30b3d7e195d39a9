#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "netform/dynamics.hpp"
#include "netform/matrix.hpp"
#include "netform/random.hpp"

using namespace netform;

namespace {

WeightMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  WeightMatrix wm{SquareMatrix(n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) wm.w(i, j) = rows[i][j];
  }
  return wm;
}

WeightMatrix random_weights(int n, RandomSource& rng, double lo = 0.1,
                            double hi = 5.0) {
  WeightMatrix wm{SquareMatrix(n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) wm.w(i, j) = lo + (hi - lo) * rng.next_double();
    }
  }
  return wm;
}

void check_row_stochastic(const ProbabilityMatrix& pm) {
  const int n = pm.n();
  for (int i = 0; i < n; ++i) {
    CHECK(pm.p(i, i) == 0.0);
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += pm.p(i, j);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("linear probabilities") {
  const auto uniform = linear_probabilities(uniform_weights(3, 1.0));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(uniform.p(i, j) == doctest::Approx(i == j ? 0.0 : 0.5));
    }
  }

  const auto pm = linear_probabilities(
      from_rows({{0, 1, 3}, {1, 0, 1}, {1, 1, 0}}));
  CHECK(pm.p(0, 1) == doctest::Approx(0.25));
  CHECK(pm.p(0, 2) == doctest::Approx(0.75));

  const auto pm4 = linear_probabilities(from_rows(
      {{0, 1, 1, 2}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}));
  CHECK(pm4.p(0, 1) == doctest::Approx(0.25));
  CHECK(pm4.p(0, 2) == doctest::Approx(0.25));
  CHECK(pm4.p(0, 3) == doctest::Approx(0.5));
}

TEST_CASE("linear probabilities rejects a degenerate row") {
  auto wm = uniform_weights(3, 1.0);
  wm.w(1, 0) = 0.0;
  wm.w(1, 2) = 0.0;
  CHECK_THROWS_AS(linear_probabilities(wm), std::invalid_argument);
}

TEST_CASE("resistance probabilities") {
  const auto uniform = resistance_probabilities(uniform_weights(4, 2.0));
  for (int j = 1; j < 4; ++j) {
    CHECK(uniform.p(0, j) == doctest::Approx(1.0 / 3));
  }

  const auto pm = resistance_probabilities(
      from_rows({{0, 1, 2}, {1, 0, 1}, {1, 1, 0}}));
  CHECK(pm.p(0, 1) == doctest::Approx(2.0 / 3));
  CHECK(pm.p(0, 2) == doctest::Approx(1.0 / 3));
  CHECK(pm.p(1, 0) == doctest::Approx(0.5));
  CHECK(pm.p(1, 2) == doctest::Approx(0.5));

  auto bad = uniform_weights(3, 1.0);
  bad.w(0, 1) = 0.0;
  CHECK_THROWS_AS(resistance_probabilities(bad), std::invalid_argument);
}

TEST_CASE("log-likelihood probabilities") {
  const auto even = loglik_probabilities(from_rows({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(even.p(0, 1) == doctest::Approx(0.5));
  CHECK(even.p(0, 2) == doctest::Approx(0.5));

  const auto pm = loglik_probabilities(
      from_rows({{0, std::log(2.0), 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(pm.p(0, 1) == doctest::Approx(2.0 / 3));
  CHECK(pm.p(0, 2) == doctest::Approx(1.0 / 3));

  auto bad = uniform_weights(3, 1.0);
  bad.w(2, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(loglik_probabilities(bad), std::invalid_argument);
}

TEST_CASE("softmax is invariant under shifting a whole row") {
  RandomSource rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    WeightMatrix wm{SquareMatrix(4)};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (j != i) wm.w(i, j) = 4.0 * rng.next_double() - 2.0;
      }
    }
    const auto before = loglik_probabilities(wm);
    const double shift = 10.0 * rng.next_double() - 5.0;
    WeightMatrix shifted = wm;
    for (int j = 0; j < 4; ++j) {
      if (j != 1) shifted.w(1, j) += shift;
    }
    const auto after = loglik_probabilities(shifted);
    for (int j = 0; j < 4; ++j) {
      CHECK(after.p(1, j) == doctest::Approx(before.p(1, j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("noisy mix") {
  const auto pm = linear_probabilities(uniform_weights(3, 1.0));
  CHECK(noisy_mix(pm, 0.0) == pm);

  const auto full = noisy_mix(pm, 1.0);
  CHECK(full.p(0, 1) == doctest::Approx(0.5));
  CHECK(full.p(2, 0) == doctest::Approx(0.5));

  ProbabilityMatrix fixed{SquareMatrix(3)};
  fixed.p(0, 1) = 1.0;
  fixed.p(1, 0) = 1.0;
  fixed.p(2, 0) = 1.0;
  const auto mixed = noisy_mix(fixed, 0.1);
  CHECK(mixed.p(0, 1) == doctest::Approx(0.95));
  CHECK(mixed.p(0, 2) == doctest::Approx(0.05));
  check_row_stochastic(mixed);
}

TEST_CASE("every probability rule emits row-stochastic matrices") {
  RandomSource rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_double() * 7);
    auto wm = random_weights(n, rng);
    check_row_stochastic(linear_probabilities(wm));
    check_row_stochastic(resistance_probabilities(wm));
    check_row_stochastic(loglik_probabilities(wm));
    check_row_stochastic(noisy_mix(linear_probabilities(wm),
                                   rng.next_double() * 0.99));
  }
}

TEST_CASE("linear update") {
  const auto wm = uniform_weights(3, 1.0);

  SUBCASE("visitor-only reinforcement") {
    const auto out = linear_update(wm, {{0, 1, 1.0, 0.0}}, false, 1.0);
    CHECK(out.w(0, 1) == 2.0);
    CHECK(out.w(1, 0) == 1.0);
  }
  SUBCASE("reciprocal reinforcement") {
    const auto out = linear_update(wm, {{0, 1, 1.0, 1.0}}, true, 1.0);
    CHECK(out.w(0, 1) == 2.0);
    CHECK(out.w(1, 0) == 2.0);
  }
  SUBCASE("discount applies to every pair, then payoffs land undiscounted") {
    auto heavy = uniform_weights(2, 10.0);
    const auto idle = linear_update(heavy, {}, true, 0.9);
    CHECK(idle.w(0, 1) == doctest::Approx(9.0));
    const auto visited = linear_update(heavy, {{0, 1, 1.0, 0.0}}, false, 0.9);
    CHECK(visited.w(0, 1) == doctest::Approx(10.0));
  }
  SUBCASE("negative result is rejected") {
    CHECK_THROWS_AS(linear_update(wm, {{0, 1, -2.0, 0.0}}, false, 1.0),
                    std::invalid_argument);
  }
  SUBCASE("batch application is order independent") {
    RandomSource rng(7);
    std::vector<VisitOutcome> outcomes{
        {0, 1, 1.0, 1.0}, {1, 2, 1.0, 1.0}, {2, 0, 1.0, 1.0}};
    const auto a = linear_update(wm, outcomes, true, 0.9);
    std::swap(outcomes[0], outcomes[2]);
    const auto b = linear_update(wm, outcomes, true, 0.9);
    CHECK(a == b);
  }
}

TEST_CASE("resistance update") {
  const auto wm = uniform_weights(3, 1.0);

  const auto visitor_only = resistance_update(wm, {{0, 1, -1.0, 0.0}}, false);
  CHECK(visitor_only.w(0, 1) == 2.0);
  CHECK(visitor_only.w(1, 0) == 1.0);

  const auto both = resistance_update(wm, {{0, 1, -1.0, -1.0}}, true);
  CHECK(both.w(0, 1) == 2.0);
  CHECK(both.w(1, 0) == 2.0);

  CHECK(resistance_update(wm, {}, true) == wm);

  CHECK_THROWS_AS(resistance_update(wm, {{0, 1, 1.0, 0.0}}, false),
                  std::invalid_argument);
}

TEST_CASE("transfer step") {
  RandomSource rng(31);
  CHECK(transfer_step({2, 0}, rng) == std::pair<int, int>{1, 1});
  CHECK(transfer_step({0, 2}, rng) == std::pair<int, int>{1, 1});
  CHECK_THROWS_AS(transfer_step({0, 0}, rng), std::invalid_argument);

  int to_first = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    const auto next = transfer_step({1, 1}, rng);
    CHECK(next.first + next.second == 2);
    if (next.first == 2) ++to_first;
  }
  // Balanced state moves each way with probability 1/2; 3 sigma band.
  const double frac = static_cast<double>(to_first) / trials;
  CHECK(frac == doctest::Approx(0.5).epsilon(0.025));
}

TEST_CASE("transfer update moves a ball to the remaining agent") {
  const auto wm = uniform_weights(3, 2.0);
  const auto out = transfer_update(wm, {{0, 1, -1.0, 0.0}});
  CHECK(out.w(0, 1) == 1.0);
  CHECK(out.w(0, 2) == 3.0);
  CHECK(out.w(0, 1) + out.w(0, 2) == 4.0);

  CHECK_THROWS_AS(transfer_update(uniform_weights(4, 1.0), {}),
                  std::invalid_argument);

  auto empty_edge = uniform_weights(3, 1.0);
  empty_edge.w(0, 1) = 0.0;
  empty_edge.w(0, 2) = 2.0;
  CHECK_THROWS_AS(transfer_update(empty_edge, {{0, 1, -1.0, 0.0}}),
                  std::invalid_argument);
}

// Under asymmetric uniform reinforcement each row is a draw-and-reinforce
// urn, so the one-step conditional expectation of the row probabilities is
// the row itself. Exact enumeration over the possible visits checks it.
TEST_CASE("one-step martingale identity for asymmetric reinforcement") {
  RandomSource rng(555);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_double() * 5);
    const auto wm = random_weights(n, rng);
    const auto pm = linear_probabilities(wm);
    for (int i = 0; i < n; ++i) {
      double row_sum = 0.0;
      for (int j = 0; j < n; ++j) row_sum += wm.w(i, j);
      for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        double expected = 0.0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          const double w_after = wm.w(i, k) + (j == k ? 1.0 : 0.0);
          expected += pm.p(i, j) * w_after / (row_sum + 1.0);
        }
        CHECK(expected == doctest::Approx(pm.p(i, k)).epsilon(1e-12));
      }
    }
  }
}

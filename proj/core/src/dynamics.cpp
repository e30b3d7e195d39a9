#include "netform/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace netform {

namespace {

void check_outcome_indices(const WeightMatrix& wm,
                           const std::vector<VisitOutcome>& outcomes) {
  const int n = wm.n();
  for (const auto& o : outcomes) {
    if (o.visitor < 0 || o.visitor >= n || o.host < 0 || o.host >= n ||
        o.visitor == o.host) {
      throw std::invalid_argument("visit outcome: invalid agent pair (" +
                                  std::to_string(o.visitor) + "," +
                                  std::to_string(o.host) + ")");
    }
  }
}

}  // namespace

ProbabilityMatrix linear_probabilities(const WeightMatrix& wm) {
  validate_weights(wm);
  const int n = wm.n();
  ProbabilityMatrix pm{SquareMatrix(n)};
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += wm.w(i, j);
    if (!(sum > 0.0)) {
      throw std::invalid_argument("linear rule: row " + std::to_string(i) +
                                  " has no positive weight");
    }
    for (int j = 0; j < n; ++j) {
      if (j != i) pm.p(i, j) = wm.w(i, j) / sum;
    }
  }
  return pm;
}

ProbabilityMatrix resistance_probabilities(const WeightMatrix& wm) {
  validate_weights(wm);
  const int n = wm.n();
  ProbabilityMatrix pm{SquareMatrix(n)};
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!(wm.w(i, j) > 0.0)) {
        throw std::invalid_argument("resistance rule: zero resistance at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
      sum += 1.0 / wm.w(i, j);
    }
    for (int j = 0; j < n; ++j) {
      if (j != i) pm.p(i, j) = (1.0 / wm.w(i, j)) / sum;
    }
  }
  return pm;
}

ProbabilityMatrix loglik_probabilities(const WeightMatrix& wm) {
  validate_weights(wm, /*allow_negative=*/true);
  const int n = wm.n();
  ProbabilityMatrix pm{SquareMatrix(n)};
  for (int i = 0; i < n; ++i) {
    // Shift by the row max so exp cannot overflow; softmax is invariant
    // under adding a constant to the row.
    double row_max = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (j != i) row_max = std::max(row_max, wm.w(i, j));
    }
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      pm.p(i, j) = std::exp(wm.w(i, j) - row_max);
      sum += pm.p(i, j);
    }
    for (int j = 0; j < n; ++j) {
      if (j != i) pm.p(i, j) /= sum;
    }
  }
  return pm;
}

ProbabilityMatrix noisy_mix(const ProbabilityMatrix& pm, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("noise: must be in [0,1], got " +
                                std::to_string(eps));
  }
  if (eps == 0.0) return pm;
  const int n = pm.n();
  const double floor = eps / (n - 1);
  ProbabilityMatrix out{SquareMatrix(n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) out.p(i, j) = floor + (1.0 - eps) * pm.p(i, j);
    }
  }
  return out;
}

namespace {

WeightMatrix additive_update(const WeightMatrix& wm,
                             const std::vector<VisitOutcome>& outcomes,
                             bool symmetric, double discount) {
  if (!(discount > 0.0 && discount <= 1.0)) {
    throw std::invalid_argument("discount: must be in (0,1], got " +
                                std::to_string(discount));
  }
  check_outcome_indices(wm, outcomes);
  WeightMatrix out = wm;
  if (discount < 1.0) {
    // Global decay: every pair fades each round, visited or not.
    for (double& v : out.w.flat()) v *= discount;
  }
  for (const auto& o : outcomes) {
    out.w(o.visitor, o.host) += o.visitor_payoff;
    if (symmetric) out.w(o.host, o.visitor) += o.host_payoff;
  }
  return out;
}

}  // namespace

WeightMatrix linear_update(const WeightMatrix& wm,
                           const std::vector<VisitOutcome>& outcomes,
                           bool symmetric, double discount) {
  WeightMatrix out = additive_update(wm, outcomes, symmetric, discount);
  const int n = out.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && out.w(i, j) < 0.0) {
        throw std::invalid_argument(
            "linear update: weight (" + std::to_string(i) + "," +
            std::to_string(j) +
            ") went negative; negative payoffs need the resistance rule");
      }
    }
  }
  return out;
}

WeightMatrix loglik_update(const WeightMatrix& wm,
                           const std::vector<VisitOutcome>& outcomes,
                           bool symmetric, double discount) {
  return additive_update(wm, outcomes, symmetric, discount);
}

WeightMatrix resistance_update(const WeightMatrix& wm,
                               const std::vector<VisitOutcome>& outcomes,
                               bool symmetric) {
  check_outcome_indices(wm, outcomes);
  for (const auto& o : outcomes) {
    if (o.visitor_payoff > 0.0 || (symmetric && o.host_payoff > 0.0)) {
      throw std::invalid_argument(
          "resistance update: positive payoff; the rule only accumulates "
          "punishment");
    }
  }
  WeightMatrix out = wm;
  for (const auto& o : outcomes) {
    out.w(o.visitor, o.host) += std::abs(o.visitor_payoff);
    if (symmetric) out.w(o.host, o.visitor) += std::abs(o.host_payoff);
  }
  return out;
}

std::pair<int, int> transfer_step(std::pair<int, int> urns,
                                  RandomSource& rng) {
  const int total = urns.first + urns.second;
  if (urns.first < 0 || urns.second < 0 || total < 1) {
    throw std::invalid_argument("transfer step: need at least one ball");
  }
  const double u = rng.next_double();
  if (u * total < urns.first) return {urns.first - 1, urns.second + 1};
  return {urns.first + 1, urns.second - 1};
}

WeightMatrix transfer_update(const WeightMatrix& wm,
                             const std::vector<VisitOutcome>& outcomes) {
  if (wm.n() != 3) {
    throw std::invalid_argument(
        "transfer rule: defined for exactly 3 agents, got " +
        std::to_string(wm.n()));
  }
  check_outcome_indices(wm, outcomes);
  WeightMatrix out = wm;
  for (const auto& o : outcomes) {
    const int other = 3 - o.visitor - o.host;  // the remaining agent
    if (out.w(o.visitor, o.host) < 1.0) {
      throw std::invalid_argument("transfer rule: no ball to move on edge (" +
                                  std::to_string(o.visitor) + "," +
                                  std::to_string(o.host) + ")");
    }
    out.w(o.visitor, o.host) -= 1.0;
    out.w(o.visitor, other) += 1.0;
  }
  return out;
}

ProbabilityMatrix rule_probabilities(const WeightMatrix& wm, UpdateRule rule) {
  switch (rule) {
    case UpdateRule::Linear:
      return linear_probabilities(wm);
    case UpdateRule::Resistance:
      return resistance_probabilities(wm);
    case UpdateRule::LogLikelihood:
      return loglik_probabilities(wm);
    case UpdateRule::Transfer:
      // Ball counts are plain weights for sampling purposes: a visit is a
      // uniform draw among the visitor's balls.
      return linear_probabilities(wm);
  }
  throw std::invalid_argument("rule: unknown update rule");
}

}  // namespace netform

#ifndef NETFORM_DYNAMICS_HPP
#define NETFORM_DYNAMICS_HPP

#include <utility>
#include <vector>

#include "netform/matrix.hpp"
#include "netform/random.hpp"
#include "netform/types.hpp"

namespace netform {

// One realized visit and the pair of payoffs it produced.
struct VisitOutcome {
  int visitor = 0;
  int host = 0;
  double visitor_payoff = 0.0;
  double host_payoff = 0.0;
};

// p[i][j] = w[i][j] / sum_k w[i][k]. Requires nonnegative weights with a
// positive off-diagonal sum in every row.
ProbabilityMatrix linear_probabilities(const WeightMatrix& wm);

// p[i][j] proportional to 1/w[i][j]; every off-diagonal resistance must be
// strictly positive.
ProbabilityMatrix resistance_probabilities(const WeightMatrix& wm);

// Softmax over the off-diagonal row entries. Weights may be negative; the
// row maximum is subtracted before exponentiation so large weights cannot
// overflow. Non-finite weights are rejected.
ProbabilityMatrix loglik_probabilities(const WeightMatrix& wm);

// p[i][j] -> eps/(n-1) + (1-eps) p[i][j] off the diagonal. eps = 0 is the
// identity, eps = 1 the uniform matrix.
ProbabilityMatrix noisy_mix(const ProbabilityMatrix& pm, double eps);

// Applies one round of reinforcement: every entry is first scaled by the
// discount, then each outcome adds its visitor payoff to w[visitor][host]
// and, when symmetric, its host payoff to w[host][visitor]. Order of the
// outcomes does not matter. A resulting negative entry (wrong game for this
// rule) throws.
WeightMatrix linear_update(const WeightMatrix& wm,
                           const std::vector<VisitOutcome>& outcomes,
                           bool symmetric, double discount);

// Punishment accumulation: adds |visitor payoff| to w[visitor][host] and,
// when symmetric, |host payoff| to w[host][visitor]. Positive payoffs are
// rejected; the rule is only defined for losses.
WeightMatrix resistance_update(const WeightMatrix& wm,
                               const std::vector<VisitOutcome>& outcomes,
                               bool symmetric);

// Same arithmetic as linear_update, but entries may go negative: weights
// are log-likelihoods here, so both reward and punishment are admissible.
WeightMatrix loglik_update(const WeightMatrix& wm,
                           const std::vector<VisitOutcome>& outcomes,
                           bool symmetric, double discount);

// Two-urn ball transfer: one of the N balls, chosen uniformly, moves to the
// other urn. Total count is preserved; N = 0 throws.
std::pair<int, int> transfer_step(std::pair<int, int> urns, RandomSource& rng);

// Ball-conserving update for the three-agent transfer model: each visit
// i -> j moves one unit from w[i][j] to w[i][k], k the remaining agent.
// Requires n == 3.
WeightMatrix transfer_update(const WeightMatrix& wm,
                             const std::vector<VisitOutcome>& outcomes);

// Dispatch on the configured rule (Transfer samples via the linear rule on
// its integer ball counts).
ProbabilityMatrix rule_probabilities(const WeightMatrix& wm, UpdateRule rule);

}  // namespace netform

#endif  // NETFORM_DYNAMICS_HPP

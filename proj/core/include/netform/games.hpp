#ifndef NETFORM_GAMES_HPP
#define NETFORM_GAMES_HPP

#include <map>
#include <utility>
#include <vector>

#include "netform/random.hpp"
#include "netform/types.hpp"

namespace netform {

struct PayoffPair {
  double visitor = 0.0;
  double host = 0.0;
};

// Payoff table lookup. The constant games pay the same regardless of type;
// the stag hunt pays
//   (Stag, Stag) -> (1, 1)      (Stag, Rabbit) -> (0, .75)
//   (Rabbit, Stag) -> (.75, 0)  (Rabbit, Rabbit) -> (.75, .75)
// Passing a type the game does not admit throws.
PayoffPair payoff(Game game, Strategy visitor_type, Strategy host_type);

// Payoffs accumulated by each agent over one round, in both roles.
struct RoundPayoffLedger {
  std::vector<double> agent_payoff;

  void add(int agent, double value) { agent_payoff[agent] += value; }
};

// Mean payoff per living type this round. Extinct types are absent.
std::map<Strategy, double> type_mean_payoffs(const RoundPayoffLedger& ledger,
                                             const StrategyProfile& profile);

// Imitation step: each agent independently, with probability q, adopts the
// type with the highest mean payoff in the ledger's round. Extinct types
// cannot be adopted, and an exact tie of means keeps the current type.
// q = 0 returns the profile unchanged without consuming randomness.
StrategyProfile strategy_revision(const StrategyProfile& profile,
                                  const RoundPayoffLedger& ledger, double q,
                                  RandomSource& rng);

}  // namespace netform

#endif  // NETFORM_GAMES_HPP

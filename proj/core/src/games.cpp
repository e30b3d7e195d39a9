#include "netform/games.hpp"

#include <stdexcept>

namespace netform {

PayoffPair payoff(Game game, Strategy visitor_type, Strategy host_type) {
  if (!strategy_valid_for(game, visitor_type) ||
      !strategy_valid_for(game, host_type)) {
    throw std::invalid_argument("payoff: strategy not admitted by " +
                                to_string(game));
  }
  switch (game) {
    case Game::FriendsI: return {1.0, 0.0};
    case Game::FriendsII: return {1.0, 1.0};
    case Game::EnemiesI: return {-1.0, 0.0};
    case Game::EnemiesII: return {-1.0, -1.0};
    case Game::StagHunt: break;
  }
  const bool vs = visitor_type == Strategy::Stag;
  const bool hs = host_type == Strategy::Stag;
  if (vs && hs) return {1.0, 1.0};
  if (vs && !hs) return {0.0, 0.75};
  if (!vs && hs) return {0.75, 0.0};
  return {0.75, 0.75};
}

std::map<Strategy, double> type_mean_payoffs(const RoundPayoffLedger& ledger,
                                             const StrategyProfile& profile) {
  if (ledger.agent_payoff.size() != profile.size()) {
    throw std::invalid_argument("ledger: size does not match profile");
  }
  std::map<Strategy, double> sums;
  std::map<Strategy, int> counts;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    sums[profile[i]] += ledger.agent_payoff[i];
    counts[profile[i]] += 1;
  }
  std::map<Strategy, double> means;
  for (auto& [type, sum] : sums) means[type] = sum / counts[type];
  return means;
}

StrategyProfile strategy_revision(const StrategyProfile& profile,
                                  const RoundPayoffLedger& ledger, double q,
                                  RandomSource& rng) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("revision-prob: must be in [0,1]");
  }
  if (q == 0.0) return profile;

  const auto means = type_mean_payoffs(ledger, profile);
  bool have_best = false;
  bool tied = false;
  Strategy best = Strategy::Trivial;
  double best_mean = 0.0;
  for (const auto& [type, m] : means) {
    if (!have_best || m > best_mean) {
      best = type;
      best_mean = m;
      have_best = true;
      tied = false;
    } else if (m == best_mean) {
      tied = true;
    }
  }

  StrategyProfile out = profile;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double u = rng.next_double();
    // A tie of means leaves every agent with its current type; the draw is
    // still consumed so the stream does not depend on the payoff data.
    if (u < q && !tied) out[i] = best;
  }
  return out;
}

}  // namespace netform

#ifndef NETFORM_TYPES_HPP
#define NETFORM_TYPES_HPP

#include <string>
#include <vector>

namespace netform {

// Agent type. Trivial is the single type of the constant-payoff games;
// Stag/Rabbit are the stag hunt types.
enum class Strategy { Trivial, Stag, Rabbit };

using StrategyProfile = std::vector<Strategy>;

enum class Game { FriendsI, FriendsII, EnemiesI, EnemiesII, StagHunt };

// Whether the host's payoff is fed back into the host's own weight row
// (the "II" games and the stag hunt; host payoffs are zero in the "I"
// games either way).
bool symmetric_updates(Game game);

// Which strategies a game accepts.
bool strategy_valid_for(Game game, Strategy s);

enum class UpdateRule { Linear, Resistance, LogLikelihood, Transfer };

std::string to_string(Strategy s);
std::string to_string(Game g);
std::string to_string(UpdateRule r);

// Knobs shared by every model: d = 1 means no discounting, noise = 0 means
// no perturbation, revision_prob = 0 freezes strategies.
struct DynamicsConfig {
  UpdateRule rule = UpdateRule::Linear;
  double discount = 1.0;        // d in (0, 1]
  double noise = 0.0;           // in [0, 1)
  double revision_prob = 0.0;   // q in [0, 1]
  double graph_eps = 0.0;       // 0 = auto (1/(4n)); else must be in (0, 1/(2n))
  double init_weight = 1.0;     // w0 > 0
};

// Throws std::invalid_argument naming the offending field.
void validate_config(const DynamicsConfig& cfg);

// Resolves the auto default and enforces 0 < eps < 1/(2n).
double resolve_graph_eps(double graph_eps, int n);

}  // namespace netform

#endif  // NETFORM_TYPES_HPP

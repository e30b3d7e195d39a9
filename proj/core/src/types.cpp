#include "netform/types.hpp"

#include <stdexcept>

namespace netform {

bool symmetric_updates(Game game) {
  switch (game) {
    case Game::FriendsI:
    case Game::EnemiesI:
      return false;
    case Game::FriendsII:
    case Game::EnemiesII:
    case Game::StagHunt:
      return true;
  }
  return false;
}

bool strategy_valid_for(Game game, Strategy s) {
  if (game == Game::StagHunt) return s != Strategy::Trivial;
  return s == Strategy::Trivial;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Trivial: return "Trivial";
    case Strategy::Stag: return "Stag";
    case Strategy::Rabbit: return "Rabbit";
  }
  return "?";
}

std::string to_string(Game g) {
  switch (g) {
    case Game::FriendsI: return "FriendsI";
    case Game::FriendsII: return "FriendsII";
    case Game::EnemiesI: return "EnemiesI";
    case Game::EnemiesII: return "EnemiesII";
    case Game::StagHunt: return "StagHunt";
  }
  return "?";
}

std::string to_string(UpdateRule r) {
  switch (r) {
    case UpdateRule::Linear: return "Linear";
    case UpdateRule::Resistance: return "Resistance";
    case UpdateRule::LogLikelihood: return "LogLikelihood";
    case UpdateRule::Transfer: return "Transfer";
  }
  return "?";
}

void validate_config(const DynamicsConfig& cfg) {
  if (!(cfg.discount > 0.0 && cfg.discount <= 1.0)) {
    throw std::invalid_argument("discount: must be in (0,1], got " +
                                std::to_string(cfg.discount));
  }
  if (!(cfg.noise >= 0.0 && cfg.noise < 1.0)) {
    throw std::invalid_argument("noise: must be in [0,1), got " +
                                std::to_string(cfg.noise));
  }
  if (!(cfg.revision_prob >= 0.0 && cfg.revision_prob <= 1.0)) {
    throw std::invalid_argument("revision-prob: must be in [0,1], got " +
                                std::to_string(cfg.revision_prob));
  }
  if (!(cfg.init_weight > 0.0)) {
    throw std::invalid_argument("init-weight: must be positive, got " +
                                std::to_string(cfg.init_weight));
  }
  if (cfg.rule == UpdateRule::Resistance && cfg.discount != 1.0) {
    // The resistance accumulator has no decay term.
    throw std::invalid_argument("discount: unsupported for resistance rule");
  }
  if (cfg.rule == UpdateRule::Transfer) {
    // The ball-transfer chain has no discounting, noise or revision notion;
    // silently accepting them would desynchronize it from the two-urn model.
    if (cfg.discount != 1.0)
      throw std::invalid_argument("discount: unsupported for transfer rule");
    if (cfg.noise != 0.0)
      throw std::invalid_argument("noise: unsupported for transfer rule");
    if (cfg.revision_prob != 0.0)
      throw std::invalid_argument(
          "revision-prob: unsupported for transfer rule");
  }
}

double resolve_graph_eps(double graph_eps, int n) {
  if (graph_eps == 0.0) return 1.0 / (4.0 * n);
  if (!(graph_eps > 0.0 && graph_eps < 1.0 / (2.0 * n))) {
    throw std::invalid_argument("graph-eps: must be in (0, 1/(2n)), got " +
                                std::to_string(graph_eps));
  }
  return graph_eps;
}

}  // namespace netform

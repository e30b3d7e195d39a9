#ifndef NETFORM_ENGINE_HPP
#define NETFORM_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "netform/dynamics.hpp"
#include "netform/games.hpp"
#include "netform/matrix.hpp"
#include "netform/random.hpp"
#include "netform/types.hpp"

namespace netform {

struct Snapshot {
  std::int64_t round = 0;
  ProbabilityMatrix p;  // the distribution visits were actually drawn from
  StrategyProfile profile;

  bool operator==(const Snapshot&) const = default;
};

struct TrajectoryRecord {
  std::vector<Snapshot> snapshots;  // strictly increasing round order
  std::int64_t rounds = 0;
  WeightMatrix final_weights;
  ProbabilityMatrix final_probabilities;
  StrategyProfile final_profile;

  bool operator==(const TrajectoryRecord&) const = default;
};

struct RoundResult {
  WeightMatrix weights;
  StrategyProfile profile;
  RoundPayoffLedger ledger;
};

// One simultaneous round: probabilities are computed once from the
// start-of-round weights (rule, then noise), every agent samples one host
// from that same matrix, all visits are scored and applied in a single
// batch, and the strategy revision runs last.
RoundResult run_round(const WeightMatrix& wm, const StrategyProfile& profile,
                      Game game, const DynamicsConfig& cfg, RandomSource& rng);

// Profile every episode starts from: all Trivial for the constant games,
// first half Stag / second half Rabbit for the stag hunt.
StrategyProfile default_profile(Game game, int n);

struct EpisodeSpec {
  int n = 2;
  Game game = Game::FriendsII;
  DynamicsConfig cfg;
  std::int64_t rounds = 1000;
  std::int64_t snapshot_stride = 10;
  StrategyProfile initial_profile;  // empty = default_profile(game, n)
};

// Runs `rounds` rounds from the uniform start state. Identical inputs and
// seed reproduce identical records. Round errors are rethrown with the
// failing round index prepended.
TrajectoryRecord run_episode(const EpisodeSpec& spec, std::uint64_t seed);

// Seeded ensemble; replica k draws from the child stream of (seed, k), so
// results are ordered by k and independent of thread scheduling.
// threads = 0 picks the hardware concurrency.
std::vector<TrajectoryRecord> run_ensemble(const EpisodeSpec& spec, int runs,
                                           std::uint64_t seed,
                                           int threads = 0);

}  // namespace netform

#endif  // NETFORM_ENGINE_HPP

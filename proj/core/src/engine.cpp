#include "netform/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace netform {

namespace {

void validate_profile(const StrategyProfile& profile, Game game, int n) {
  if (static_cast<int>(profile.size()) != n) {
    throw std::invalid_argument("profile: expected " + std::to_string(n) +
                                " entries, got " +
                                std::to_string(profile.size()));
  }
  for (Strategy s : profile) {
    if (!strategy_valid_for(game, s)) {
      throw std::invalid_argument("profile: strategy " + to_string(s) +
                                  " not admitted by " + to_string(game));
    }
  }
}

WeightMatrix apply_updates(const WeightMatrix& wm,
                           const std::vector<VisitOutcome>& outcomes,
                           Game game, const DynamicsConfig& cfg) {
  const bool symmetric = symmetric_updates(game);
  switch (cfg.rule) {
    case UpdateRule::Linear:
      return linear_update(wm, outcomes, symmetric, cfg.discount);
    case UpdateRule::Resistance:
      return resistance_update(wm, outcomes, symmetric);
    case UpdateRule::LogLikelihood:
      return loglik_update(wm, outcomes, symmetric, cfg.discount);
    case UpdateRule::Transfer:
      return transfer_update(wm, outcomes);
  }
  throw std::invalid_argument("rule: unknown update rule");
}

// The core of a round, given the sampling matrix already derived from the
// current weights. Draw order is fixed: one host draw per agent in index
// order, then (when q > 0) one revision draw per agent.
RoundResult play_round(const WeightMatrix& wm, const StrategyProfile& profile,
                       const ProbabilityMatrix& pm, Game game,
                       const DynamicsConfig& cfg, RandomSource& rng) {
  const int n = wm.n();
  std::vector<VisitOutcome> outcomes;
  outcomes.reserve(n);
  RoundPayoffLedger ledger;
  ledger.agent_payoff.assign(n, 0.0);

  for (int i = 0; i < n; ++i) {
    const int host = rng.sample_index(pm.p.row(i));
    const PayoffPair pay = payoff(game, profile[i], profile[host]);
    outcomes.push_back({i, host, pay.visitor, pay.host});
    ledger.add(i, pay.visitor);
    ledger.add(host, pay.host);
  }

  RoundResult result{apply_updates(wm, outcomes, game, cfg),
                     strategy_revision(profile, ledger, cfg.revision_prob, rng),
                     std::move(ledger)};
  return result;
}

void validate_spec(const EpisodeSpec& spec) {
  if (spec.n < 2) {
    throw std::invalid_argument("agents: population must be at least 2, got " +
                                std::to_string(spec.n));
  }
  if (spec.rounds < 0) {
    throw std::invalid_argument("rounds: must be nonnegative, got " +
                                std::to_string(spec.rounds));
  }
  if (spec.snapshot_stride < 1) {
    throw std::invalid_argument("stride: must be positive, got " +
                                std::to_string(spec.snapshot_stride));
  }
  validate_config(spec.cfg);
  if (spec.cfg.rule == UpdateRule::Transfer) {
    if (spec.n != 3) {
      throw std::invalid_argument(
          "agents: transfer rule is defined for exactly 3 agents");
    }
    if (spec.cfg.init_weight != std::floor(spec.cfg.init_weight)) {
      throw std::invalid_argument(
          "init-weight: transfer rule needs integer ball counts");
    }
  }
}

}  // namespace

RoundResult run_round(const WeightMatrix& wm, const StrategyProfile& profile,
                      Game game, const DynamicsConfig& cfg,
                      RandomSource& rng) {
  validate_config(cfg);
  validate_profile(profile, game, wm.n());
  const ProbabilityMatrix pm =
      noisy_mix(rule_probabilities(wm, cfg.rule), cfg.noise);
  return play_round(wm, profile, pm, game, cfg, rng);
}

StrategyProfile default_profile(Game game, int n) {
  if (game != Game::StagHunt) return StrategyProfile(n, Strategy::Trivial);
  StrategyProfile profile(n, Strategy::Rabbit);
  for (int i = 0; i < (n + 1) / 2; ++i) profile[i] = Strategy::Stag;
  return profile;
}

TrajectoryRecord run_episode(const EpisodeSpec& spec, std::uint64_t seed) {
  validate_spec(spec);
  StrategyProfile profile = spec.initial_profile.empty()
                                ? default_profile(spec.game, spec.n)
                                : spec.initial_profile;
  validate_profile(profile, spec.game, spec.n);

  WeightMatrix wm = uniform_weights(spec.n, spec.cfg.init_weight);
  RandomSource rng(seed);
  TrajectoryRecord record;
  record.rounds = spec.rounds;

  for (std::int64_t r = 0;; ++r) {
    ProbabilityMatrix pm;
    try {
      pm = noisy_mix(rule_probabilities(wm, spec.cfg.rule), spec.cfg.noise);
    } catch (const std::exception& e) {
      throw std::runtime_error("round " + std::to_string(r) + ": " + e.what());
    }
    if (r % spec.snapshot_stride == 0 || r == spec.rounds) {
      record.snapshots.push_back({r, pm, profile});
    }
    if (r == spec.rounds) {
      record.final_weights = std::move(wm);
      record.final_probabilities = std::move(pm);
      record.final_profile = std::move(profile);
      break;
    }
    try {
      RoundResult result = play_round(wm, profile, pm, spec.game, spec.cfg, rng);
      wm = std::move(result.weights);
      profile = std::move(result.profile);
    } catch (const std::exception& e) {
      throw std::runtime_error("round " + std::to_string(r + 1) + ": " +
                               e.what());
    }
  }
  return record;
}

std::vector<TrajectoryRecord> run_ensemble(const EpisodeSpec& spec, int runs,
                                           std::uint64_t seed, int threads) {
  validate_spec(spec);
  if (runs < 1) {
    throw std::invalid_argument("runs: must be at least 1, got " +
                                std::to_string(runs));
  }
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }
  threads = std::min(threads, runs);

  std::vector<TrajectoryRecord> records(runs);
  if (threads == 1) {
    for (int k = 0; k < runs; ++k) {
      records[k] = run_episode(spec, child_seed(seed, k));
    }
    return records;
  }

  // Replicas share nothing; each worker claims the next index. Results land
  // by replica index, so scheduling cannot change the output.
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int k = next.fetch_add(1); k < runs; k = next.fetch_add(1)) {
          records[k] = run_episode(spec, child_seed(seed, k));
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return records;
}

}  // namespace netform

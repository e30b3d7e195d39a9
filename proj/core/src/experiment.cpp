#include "netform/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "netform/ehrenfest.hpp"
#include "netform/engine.hpp"
#include "netform/io.hpp"

namespace netform {

ModelSpec parse_model(const std::string& name) {
  if (name == "friends1") return {Game::FriendsI, UpdateRule::Linear};
  if (name == "friends2") return {Game::FriendsII, UpdateRule::Linear};
  if (name == "enemies1") return {Game::EnemiesI, UpdateRule::Resistance};
  if (name == "enemies2") return {Game::EnemiesII, UpdateRule::Resistance};
  if (name == "transfer") return {Game::EnemiesI, UpdateRule::Transfer};
  if (name == "staghunt") return {Game::StagHunt, UpdateRule::Linear};
  if (name == "loglik-friends1")
    return {Game::FriendsI, UpdateRule::LogLikelihood};
  if (name == "loglik-friends2")
    return {Game::FriendsII, UpdateRule::LogLikelihood};
  throw std::invalid_argument("model: unknown model '" + name + "'");
}

namespace {

DynamicsConfig dynamics_config(const ExperimentConfig& cfg) {
  const ModelSpec model = parse_model(cfg.model);
  DynamicsConfig dyn;
  dyn.rule = model.rule;
  dyn.discount = cfg.discount;
  dyn.noise = cfg.noise;
  dyn.revision_prob = cfg.revision_prob;
  dyn.graph_eps = cfg.graph_eps;
  dyn.init_weight = cfg.init_weight;
  return dyn;
}

}  // namespace

void validate_experiment(const ExperimentConfig& cfg) {
  const ModelSpec model = parse_model(cfg.model);
  if (cfg.agents < 2) {
    throw std::invalid_argument("agents: population must be at least 2, got " +
                                std::to_string(cfg.agents));
  }
  if (cfg.rounds < 0) {
    throw std::invalid_argument("rounds: must be nonnegative, got " +
                                std::to_string(cfg.rounds));
  }
  if (cfg.runs < 1) {
    throw std::invalid_argument("runs: must be at least 1, got " +
                                std::to_string(cfg.runs));
  }
  if (cfg.stride < 1) {
    throw std::invalid_argument("stride: must be positive, got " +
                                std::to_string(cfg.stride));
  }
  if (!(cfg.fixation_tol > 0.0 && cfg.fixation_tol < 1.0)) {
    throw std::invalid_argument("fixation-tol: must be in (0,1), got " +
                                std::to_string(cfg.fixation_tol));
  }
  if (cfg.format != "csv" && cfg.format != "json") {
    throw std::invalid_argument("format: must be csv or json, got '" +
                                cfg.format + "'");
  }
  if (cfg.threads < 0) {
    throw std::invalid_argument("threads: must be nonnegative");
  }
  validate_config(dynamics_config(cfg));
  resolve_graph_eps(cfg.graph_eps, cfg.agents);  // throws when out of range
  if (model.rule == UpdateRule::Transfer && cfg.agents != 3) {
    throw std::invalid_argument(
        "agents: transfer model is defined for exactly 3 agents");
  }
}

namespace {

std::vector<std::int64_t> snapshot_rounds(const TrajectoryRecord& rec) {
  std::vector<std::int64_t> rounds;
  rounds.reserve(rec.snapshots.size());
  for (const auto& s : rec.snapshots) rounds.push_back(s.round);
  return rounds;
}

void add_trap_stats(ExperimentResult& result,
                    const std::vector<TrajectoryRecord>& records) {
  const auto traps = unstable_equilibria_n3();
  const double trap_eps = 0.05;
  const auto rounds = snapshot_rounds(records.front());
  std::vector<double> fraction(rounds.size(), 0.0);
  std::vector<double> defect(rounds.size(), 0.0);
  for (const auto& rec : records) {
    for (std::size_t s = 0; s < rec.snapshots.size(); ++s) {
      if (trap_proximity(rec.snapshots[s].p, traps) <= trap_eps)
        fraction[s] += 1.0;
      defect[s] += symmetry_defect(rec.snapshots[s].p);
    }
  }
  for (auto& f : fraction) f /= records.size();
  for (auto& d : defect) d /= records.size();
  result.scalar_stats["trap_eps"] = trap_eps;
  result.vector_stats["checkpoint_rounds"] =
      std::vector<double>(rounds.begin(), rounds.end());
  result.vector_stats["trap_fraction"] = fraction;
  result.vector_stats["mean_symmetry_defect"] = defect;
}

void add_staghunt_stats(ExperimentResult& result,
                        const std::vector<TrajectoryRecord>& records) {
  const auto rounds = snapshot_rounds(records.front());
  std::vector<double> medians(rounds.size(), 0.0);
  std::vector<double> sample;
  for (std::size_t s = 0; s < rounds.size(); ++s) {
    sample.clear();
    for (const auto& rec : records) {
      sample.push_back(
          cross_type_mass(rec.snapshots[s].p, rec.snapshots[s].profile));
    }
    medians[s] = median(sample);
  }
  result.vector_stats["checkpoint_rounds"] =
      std::vector<double>(rounds.begin(), rounds.end());
  result.vector_stats["median_cross_type_mass"] = medians;
  const double runs = static_cast<double>(records.size());
  result.scalar_stats["all_stag_fraction"] = result.summary.all_stag / runs;
  result.scalar_stats["all_rabbit_fraction"] =
      result.summary.all_rabbit / runs;
  result.scalar_stats["absorbed_fraction"] =
      (result.summary.all_stag + result.summary.all_rabbit) / runs;
}

void add_enemies_stats(ExperimentResult& result,
                       const std::vector<TrajectoryRecord>& records,
                       std::int64_t rounds) {
  const int n = records.front().final_probabilities.n();
  const double uniform = 1.0 / (n - 1);
  int within = 0;
  std::vector<SquareMatrix> deviations;
  deviations.reserve(records.size());
  const double scale = std::sqrt(static_cast<double>(std::max<std::int64_t>(rounds, 1)));
  for (const auto& rec : records) {
    if (distance_to_uniform(rec.final_probabilities) < 0.05) ++within;
    SquareMatrix dev(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j != i) dev(i, j) = scale * (rec.final_probabilities.p(i, j) - uniform);
      }
    }
    deviations.push_back(std::move(dev));
  }
  result.scalar_stats["frac_within_005_of_uniform"] =
      static_cast<double>(within) / records.size();
  if (records.size() >= 2) {
    result.scalar_stats["covariance_rank_rel05"] =
        covariance_rank(deviations, 0.05);
  }
}

void add_transfer_stats(ExperimentResult& result,
                        const std::vector<TrajectoryRecord>& records,
                        const ExperimentConfig& cfg) {
  // Each agent's weight row is a pair of urns holding 2*w0 balls in total.
  const int n_balls = 2 * static_cast<int>(cfg.init_weight);
  const auto stationary = ehrenfest_stationary(n_balls);
  result.vector_stats["stationary_exact"] = stationary;

  std::vector<double> occupancy(n_balls + 1, 0.0);
  double total = 0.0;
  for (const auto& rec : records) {
    for (const auto& snap : rec.snapshots) {
      for (int i = 0; i < 3; ++i) {
        const int first_other = (i == 0) ? 1 : 0;
        const int count = static_cast<int>(
            std::lround(snap.p.p(i, first_other) * n_balls));
        occupancy[std::clamp(count, 0, n_balls)] += 1.0;
        total += 1.0;
      }
    }
  }
  for (auto& o : occupancy) o /= total;
  result.vector_stats["state_occupancy"] = occupancy;

  const int mix_steps = static_cast<int>(
      std::ceil(0.5 * n_balls * std::log(static_cast<double>(n_balls))));
  result.scalar_stats["lazy_mixing_steps"] = mix_steps;
  std::vector<double> steps, tvs;
  for (int mult : {1, 2, 4}) {
    steps.push_back(mult * mix_steps);
    tvs.push_back(ehrenfest_lazy_tv_from_extreme(n_balls, mult * mix_steps));
  }
  result.vector_stats["lazy_tv_steps"] = steps;
  result.vector_stats["lazy_tv_from_extreme"] = tvs;
}

void add_occupancy_stats(ExperimentResult& result,
                         const std::vector<TrajectoryRecord>& records,
                         const ExperimentConfig& cfg) {
  std::int64_t pairing = 0, classified = 0, snapshots = 0;
  for (const auto& rec : records) {
    for (const auto& snap : rec.snapshots) {
      ++snapshots;
      const StateClass cls = classify_state(snap.p, snap.profile,
                                            cfg.graph_eps, cfg.fixation_tol);
      if (cls.label == StateLabel::Unsettled) continue;
      ++classified;
      if (cls.label == StateLabel::Pairing) ++pairing;
    }
  }
  result.scalar_stats["classified_snapshot_fraction"] =
      snapshots ? static_cast<double>(classified) / snapshots : 0.0;
  result.scalar_stats["pairing_occupancy_of_classified"] =
      classified ? static_cast<double>(pairing) / classified : 0.0;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_experiment(cfg);
  const ModelSpec model = parse_model(cfg.model);

  EpisodeSpec spec;
  spec.n = cfg.agents;
  spec.game = model.game;
  spec.cfg = dynamics_config(cfg);
  spec.rounds = cfg.rounds;
  spec.snapshot_stride = cfg.stride;

  const auto records = run_ensemble(spec, cfg.runs, cfg.seed, cfg.threads);

  ExperimentResult result;
  result.config = cfg;
  result.summary =
      summarize_ensemble(records, {cfg.graph_eps, cfg.fixation_tol});
  result.final_matrices.reserve(records.size());
  for (const auto& rec : records) {
    result.final_matrices.push_back(rec.final_probabilities);
  }

  if (model.rule == UpdateRule::Linear && model.game == Game::FriendsII &&
      cfg.agents == 3) {
    add_trap_stats(result, records);
  }
  if (model.game == Game::StagHunt) {
    add_staghunt_stats(result, records);
  }
  if (model.rule == UpdateRule::Resistance) {
    add_enemies_stats(result, records, cfg.rounds);
  }
  if (model.rule == UpdateRule::Transfer) {
    add_transfer_stats(result, records, cfg);
  }
  if (cfg.discount < 1.0 && model.rule == UpdateRule::Linear) {
    add_occupancy_stats(result, records, cfg);
  }
  return result;
}

}  // namespace netform

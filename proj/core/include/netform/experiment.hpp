#ifndef NETFORM_EXPERIMENT_HPP
#define NETFORM_EXPERIMENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "netform/analysis.hpp"
#include "netform/types.hpp"

namespace netform {

// A CLI model is a game plus the weight-update rule that drives it.
struct ModelSpec {
  Game game = Game::FriendsII;
  UpdateRule rule = UpdateRule::Linear;
};

// Known names: friends1, friends2, enemies1, enemies2, transfer, staghunt,
// loglik-friends1, loglik-friends2. Throws on anything else.
ModelSpec parse_model(const std::string& name);

// Full experiment description; one-to-one with the CLI flags.
struct ExperimentConfig {
  std::string model = "friends2";
  int agents = 10;
  std::int64_t rounds = 1000;
  int runs = 1;
  std::uint64_t seed = 1;
  double discount = 1.0;
  double noise = 0.0;
  double revision_prob = 0.0;
  double init_weight = 1.0;
  double graph_eps = 0.0;  // 0 = auto 1/(4n)
  double fixation_tol = 0.01;
  std::int64_t stride = 10;
  std::string out_dir;  // empty = print only, write nothing
  std::string format = "csv";
  int threads = 0;  // 0 = hardware concurrency
};

// Throws std::invalid_argument naming the offending key.
void validate_experiment(const ExperimentConfig& cfg);

struct ExperimentResult {
  ExperimentConfig config;
  EnsembleSummary summary;
  // Model-specific statistics (checkpoint series, stationary vectors, ...).
  std::map<std::string, double> scalar_stats;
  std::map<std::string, std::vector<double>> vector_stats;
  std::vector<ProbabilityMatrix> final_matrices;  // one per replica, by index
  std::vector<std::string> written_files;
};

// Runs the configured ensemble and aggregates everything; writes no files.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace netform

#endif  // NETFORM_EXPERIMENT_HPP

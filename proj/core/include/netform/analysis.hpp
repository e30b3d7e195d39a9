#ifndef NETFORM_ANALYSIS_HPP
#define NETFORM_ANALYSIS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "netform/engine.hpp"
#include "netform/matrix.hpp"
#include "netform/stats.hpp"
#include "netform/types.hpp"

namespace netform {

// Undirected support graph of a probability matrix.
struct InteractionGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
};

// Edge {i,j} present iff either directed probability exceeds the threshold.
// Requires 0 < eps < 1/(2n). Lowering eps never removes edges.
InteractionGraph extract_graph(const ProbabilityMatrix& pm, double graph_eps);

enum class StateLabel { Pairing, PairsPlusStars, Fixation, Uniform, Unsettled };

std::string to_string(StateLabel label);

struct Star {
  int center = 0;
  std::vector<int> leaves;
};

struct StateClass {
  StateLabel label = StateLabel::Unsettled;
  std::vector<std::pair<int, int>> pairs;
  std::vector<Star> stars;
  std::vector<int> fixation_target;  // i -> visited partner, Fixation only
};

// Classifies a terminal (or in-flight) state. A pairs-and-stars
// decomposition wins over plain Fixation: a perfect pairing is reported as
// Pairing even though every row is degenerate. Fixation then catches the
// one-partner-per-agent states whose graph is not a pairs/stars partition,
// Uniform the near-uniform matrices, Unsettled everything else.
StateClass classify_state(const ProbabilityMatrix& pm,
                          const StrategyProfile& profile, double graph_eps,
                          double fixation_tol);

// Max off-diagonal deviation from the uniform matrix 1/(n-1).
double distance_to_uniform(const ProbabilityMatrix& pm);

// Max |p[i][j] - p[j][i]|.
double symmetry_defect(const ProbabilityMatrix& pm);

// Min over traps of the max-entry distance. Throws on an empty trap set or
// a dimension mismatch.
double trap_proximity(const ProbabilityMatrix& pm,
                      const std::vector<ProbabilityMatrix>& traps);

// The three unstable rest states of the three-agent reciprocal
// reinforcement: the star matrices, where one agent receives both others'
// visits and splits her own evenly between them.
std::vector<ProbabilityMatrix> unstable_equilibria_n3();

// Count of covariance eigenvalues above rel_tol times the largest one,
// after flattening the off-diagonal entries of each deviation matrix.
// Needs at least two samples and rel_tol in (0,1).
int covariance_rank(const std::vector<SquareMatrix>& deviations,
                    double rel_tol);

// Probability mass agents place on the opposite type, averaged over agents.
// Zero when fewer than two types are alive.
double cross_type_mass(const ProbabilityMatrix& pm,
                       const StrategyProfile& profile);

struct SummaryThresholds {
  double graph_eps = 0.0;  // 0 = auto 1/(4n)
  double fixation_tol = 0.01;
};

struct EnsembleSummary {
  std::map<std::string, int> class_counts;  // label -> replicas
  int all_stag = 0;
  int all_rabbit = 0;
  int mixed = 0;  // any profile that is not all-Stag or all-Rabbit
  double mean_distance_to_uniform = 0.0;
  double mean_symmetry_defect = 0.0;
  KsResult ks_entry01;  // the (0,1) entry across replicas vs Uniform(0,1)
};

// Classifies every final state and aggregates the ensemble-level statistics.
EnsembleSummary summarize_ensemble(const std::vector<TrajectoryRecord>& records,
                                   const SummaryThresholds& thresholds);

}  // namespace netform

#endif  // NETFORM_ANALYSIS_HPP

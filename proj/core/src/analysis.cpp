#include "netform/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace netform {

InteractionGraph extract_graph(const ProbabilityMatrix& pm, double graph_eps) {
  const int n = pm.n();
  const double eps = resolve_graph_eps(graph_eps, n);
  InteractionGraph g{n, {}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (pm.p(i, j) > eps || pm.p(j, i) > eps) g.edges.push_back({i, j});
    }
  }
  return g;
}

std::string to_string(StateLabel label) {
  switch (label) {
    case StateLabel::Pairing: return "Pairing";
    case StateLabel::PairsPlusStars: return "PairsPlusStars";
    case StateLabel::Fixation: return "Fixation";
    case StateLabel::Uniform: return "Uniform";
    case StateLabel::Unsettled: return "Unsettled";
  }
  return "?";
}

namespace {

// Tries to read the graph as a disjoint union of single edges and stars.
// Fills pairs/stars and returns true on success. Isolated vertices fail.
bool decompose_pairs_and_stars(const InteractionGraph& g,
                               std::vector<std::pair<int, int>>& pairs,
                               std::vector<Star>& stars) {
  const int n = g.n;
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<int> component(n, -1);
  int comp_count = 0;
  for (int start = 0; start < n; ++start) {
    if (component[start] != -1) continue;
    std::vector<int> stack{start}, members;
    component[start] = comp_count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int u : adj[v]) {
        if (component[u] == -1) {
          component[u] = comp_count;
          stack.push_back(u);
        }
      }
    }
    ++comp_count;

    if (members.size() < 2) return false;  // isolated vertex
    std::size_t edge_count = 0;
    for (int v : members) edge_count += adj[v].size();
    edge_count /= 2;
    if (edge_count != members.size() - 1) return false;  // has a cycle

    if (members.size() == 2) {
      pairs.push_back({std::min(members[0], members[1]),
                       std::max(members[0], members[1])});
      continue;
    }
    // A star needs one hub carrying every edge of the component.
    int center = -1;
    for (int v : members) {
      if (adj[v].size() == members.size() - 1) {
        center = v;
        break;
      }
    }
    if (center == -1) return false;
    Star star{center, {}};
    for (int v : members) {
      if (v != center) star.leaves.push_back(v);
    }
    std::sort(star.leaves.begin(), star.leaves.end());
    stars.push_back(std::move(star));
  }
  std::sort(pairs.begin(), pairs.end());
  std::sort(stars.begin(), stars.end(),
            [](const Star& a, const Star& b) { return a.center < b.center; });
  return true;
}

}  // namespace

StateClass classify_state(const ProbabilityMatrix& pm,
                          const StrategyProfile& profile, double graph_eps,
                          double fixation_tol) {
  (void)profile;  // class labels depend on structure only
  const int n = pm.n();
  const double settled = 1.0 - fixation_tol;

  // Pairs-and-stars first: a perfect pairing is also row-degenerate, and
  // the more specific label wins.
  const InteractionGraph g = extract_graph(pm, graph_eps);
  StateClass cls;
  std::vector<std::pair<int, int>> pairs;
  std::vector<Star> stars;
  if (decompose_pairs_and_stars(g, pairs, stars)) {
    bool locked = true;
    for (auto [i, j] : pairs) {
      if (pm.p(i, j) < settled || pm.p(j, i) < settled) locked = false;
    }
    for (const auto& star : stars) {
      for (int leaf : star.leaves) {
        if (pm.p(leaf, star.center) < settled) locked = false;
      }
    }
    if (locked) {
      cls.label = stars.empty() ? StateLabel::Pairing : StateLabel::PairsPlusStars;
      cls.pairs = std::move(pairs);
      cls.stars = std::move(stars);
      return cls;
    }
  }

  bool all_rows_degenerate = true;
  std::vector<int> targets(n, -1);
  for (int i = 0; i < n; ++i) {
    double best = -1.0;
    for (int j = 0; j < n; ++j) {
      if (j != i && pm.p(i, j) > best) {
        best = pm.p(i, j);
        targets[i] = j;
      }
    }
    if (best < settled) all_rows_degenerate = false;
  }
  if (all_rows_degenerate) {
    cls.label = StateLabel::Fixation;
    cls.fixation_target = std::move(targets);
    return cls;
  }

  if (distance_to_uniform(pm) <= fixation_tol) {
    cls.label = StateLabel::Uniform;
    return cls;
  }
  cls.label = StateLabel::Unsettled;
  return cls;
}

double distance_to_uniform(const ProbabilityMatrix& pm) {
  const int n = pm.n();
  const double uniform = 1.0 / (n - 1);
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) d = std::max(d, std::abs(pm.p(i, j) - uniform));
    }
  }
  return d;
}

double symmetry_defect(const ProbabilityMatrix& pm) {
  const int n = pm.n();
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      d = std::max(d, std::abs(pm.p(i, j) - pm.p(j, i)));
    }
  }
  return d;
}

double trap_proximity(const ProbabilityMatrix& pm,
                      const std::vector<ProbabilityMatrix>& traps) {
  if (traps.empty()) {
    throw std::invalid_argument("trap proximity: empty trap set");
  }
  const int n = pm.n();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& trap : traps) {
    if (trap.n() != n) {
      throw std::invalid_argument("trap proximity: dimension mismatch");
    }
    double d = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d = std::max(d, std::abs(pm.p(i, j) - trap.p(i, j)));
      }
    }
    best = std::min(best, d);
  }
  return best;
}

std::vector<ProbabilityMatrix> unstable_equilibria_n3() {
  // One agent receives everyone's visits and splits her own evenly between
  // the other two: the size-3 star configurations. These are the rest
  // states the three-agent reciprocal process measurably lingers near.
  std::vector<ProbabilityMatrix> traps(3, ProbabilityMatrix{SquareMatrix(3)});
  for (int center = 0; center < 3; ++center) {
    auto& p = traps[center].p;
    const int a = (center + 1) % 3;
    const int b = (center + 2) % 3;
    p(center, a) = 0.5;
    p(center, b) = 0.5;
    p(a, center) = 1.0;
    p(b, center) = 1.0;
  }
  return traps;
}

int covariance_rank(const std::vector<SquareMatrix>& deviations,
                    double rel_tol) {
  if (deviations.size() < 2) {
    throw std::invalid_argument("covariance rank: need at least two samples");
  }
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw std::invalid_argument("covariance rank: rel_tol must be in (0,1)");
  }
  const int n = deviations.front().size();
  const int dim = n * (n - 1);
  const int samples = static_cast<int>(deviations.size());

  Eigen::MatrixXd x(samples, dim);
  for (int s = 0; s < samples; ++s) {
    if (deviations[s].size() != n) {
      throw std::invalid_argument("covariance rank: dimension mismatch");
    }
    int c = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j != i) x(s, c++) = deviations[s](i, j);
      }
    }
  }
  const Eigen::RowVectorXd mu = x.colwise().mean();
  x.rowwise() -= mu;
  const Eigen::MatrixXd cov = (x.transpose() * x) / (samples - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  const auto& ev = solver.eigenvalues();
  const double largest = ev(dim - 1);
  if (!(largest > 0.0)) return 0;
  int rank = 0;
  for (int i = 0; i < dim; ++i) {
    if (ev(i) > rel_tol * largest) ++rank;
  }
  return rank;
}

double cross_type_mass(const ProbabilityMatrix& pm,
                       const StrategyProfile& profile) {
  const int n = pm.n();
  if (static_cast<int>(profile.size()) != n) {
    throw std::invalid_argument("cross-type mass: profile size mismatch");
  }
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i && profile[j] != profile[i]) total += pm.p(i, j);
    }
  }
  return total / n;
}

EnsembleSummary summarize_ensemble(const std::vector<TrajectoryRecord>& records,
                                   const SummaryThresholds& thresholds) {
  if (records.empty()) {
    throw std::invalid_argument("summarize: empty ensemble");
  }
  EnsembleSummary summary;
  std::vector<double> entry01;
  double dist_sum = 0.0, defect_sum = 0.0;
  for (const auto& rec : records) {
    const StateClass cls =
        classify_state(rec.final_probabilities, rec.final_profile,
                       thresholds.graph_eps, thresholds.fixation_tol);
    summary.class_counts[to_string(cls.label)] += 1;

    const auto& profile = rec.final_profile;
    const bool all_stag = std::all_of(profile.begin(), profile.end(),
                                      [](Strategy s) { return s == Strategy::Stag; });
    const bool all_rabbit =
        std::all_of(profile.begin(), profile.end(),
                    [](Strategy s) { return s == Strategy::Rabbit; });
    if (all_stag) {
      ++summary.all_stag;
    } else if (all_rabbit) {
      ++summary.all_rabbit;
    } else {
      ++summary.mixed;
    }

    dist_sum += distance_to_uniform(rec.final_probabilities);
    defect_sum += symmetry_defect(rec.final_probabilities);
    entry01.push_back(rec.final_probabilities.p(0, 1));
  }
  summary.mean_distance_to_uniform = dist_sum / records.size();
  summary.mean_symmetry_defect = defect_sum / records.size();
  summary.ks_entry01 = ks_uniformity_test(entry01);
  return summary;
}

}  // namespace netform

#include "netform/ehrenfest.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netform {

std::vector<std::vector<double>> ehrenfest_transition_matrix(int n_balls) {
  if (n_balls < 1) {
    throw std::invalid_argument("ehrenfest: need at least one ball");
  }
  const int states = n_balls + 1;
  std::vector<std::vector<double>> t(states, std::vector<double>(states, 0.0));
  for (int k = 0; k <= n_balls; ++k) {
    // k balls in the first urn; a uniformly chosen ball switches urns.
    if (k > 0) t[k][k - 1] = static_cast<double>(k) / n_balls;
    if (k < n_balls) t[k][k + 1] = static_cast<double>(n_balls - k) / n_balls;
  }
  return t;
}

std::vector<double> ehrenfest_stationary(int n_balls) {
  const auto t = ehrenfest_transition_matrix(n_balls);
  const int states = n_balls + 1;

  // Solve pi P = pi with sum(pi) = 1: rows of (P^T - I) plus the
  // normalization replace the last equation.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(states, states);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(states);
  for (int i = 0; i < states - 1; ++i) {
    for (int j = 0; j < states; ++j) {
      a(i, j) = t[j][i] - (i == j ? 1.0 : 0.0);
    }
  }
  for (int j = 0; j < states; ++j) a(states - 1, j) = 1.0;
  rhs(states - 1) = 1.0;

  const Eigen::VectorXd pi = a.fullPivLu().solve(rhs);
  return {pi.data(), pi.data() + states};
}

double ehrenfest_lazy_tv_from_extreme(int n_balls, int steps) {
  if (steps < 0) {
    throw std::invalid_argument("ehrenfest: negative step count");
  }
  const auto t = ehrenfest_transition_matrix(n_balls);
  const int states = n_balls + 1;

  std::vector<double> dist(states, 0.0);
  dist[0] = 1.0;  // all balls in the second urn
  std::vector<double> next(states, 0.0);
  for (int s = 0; s < steps; ++s) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int i = 0; i < states; ++i) {
      if (dist[i] == 0.0) continue;
      next[i] += 0.5 * dist[i];  // lazy half-step
      for (int j = 0; j < states; ++j) {
        if (t[i][j] != 0.0) next[j] += 0.5 * dist[i] * t[i][j];
      }
    }
    dist.swap(next);
  }

  const auto pi = ehrenfest_stationary(n_balls);
  double tv = 0.0;
  for (int i = 0; i < states; ++i) tv += std::abs(dist[i] - pi[i]);
  return 0.5 * tv;
}

}  // namespace netform

#include "netform/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace netform {

WeightMatrix uniform_weights(int n, double w0) {
  if (n < 2) {
    throw std::invalid_argument("agents: population must be at least 2, got " +
                                std::to_string(n));
  }
  if (!(w0 > 0.0)) {
    throw std::invalid_argument("init-weight: must be positive, got " +
                                std::to_string(w0));
  }
  WeightMatrix wm{SquareMatrix(n, w0)};
  for (int i = 0; i < n; ++i) wm.w(i, i) = 0.0;
  return wm;
}

void validate_weights(const WeightMatrix& wm, bool allow_negative) {
  const int n = wm.n();
  if (n < 2) throw std::invalid_argument("weight matrix: fewer than 2 agents");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = wm.w(i, j);
      if (!std::isfinite(v)) {
        throw std::invalid_argument("weight matrix: non-finite entry at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
      if (i == j && v != 0.0) {
        throw std::invalid_argument("weight matrix: nonzero diagonal at " +
                                    std::to_string(i));
      }
      if (!allow_negative && i != j && v < 0.0) {
        throw std::invalid_argument("weight matrix: negative entry at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
    }
  }
}

void validate_probabilities(const ProbabilityMatrix& pm) {
  const int n = pm.n();
  if (n < 2)
    throw std::invalid_argument("probability matrix: fewer than 2 agents");
  for (int i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double v = pm.p(i, j);
      if (i == j) {
        if (v != 0.0) {
          throw std::invalid_argument(
              "probability matrix: nonzero diagonal at " + std::to_string(i));
        }
        continue;
      }
      if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("probability matrix: entry (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ") outside [0,1]");
      }
      row_sum += v;
    }
    if (std::abs(row_sum - 1.0) > kRowSumTol) {
      throw std::invalid_argument("probability matrix: row " +
                                  std::to_string(i) + " sums to " +
                                  std::to_string(row_sum));
    }
  }
}

}  // namespace netform

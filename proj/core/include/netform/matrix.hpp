#ifndef NETFORM_MATRIX_HPP
#define NETFORM_MATRIX_HPP

#include <span>
#include <vector>

namespace netform {

// Dense row-major square matrix. Populations stay small (a few hundred at
// most), so no sparse storage.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, double fill = 0.0)
      : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const { return n_; }

  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  double& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }

  std::span<const double> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * n_,
            static_cast<std::size_t>(n_)};
  }
  std::span<double> row(int i) {
    return {data_.data() + static_cast<std::size_t>(i) * n_,
            static_cast<std::size_t>(n_)};
  }

  std::span<const double> flat() const { return data_; }
  std::span<double> flat() { return data_; }

  bool operator==(const SquareMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

// Directed pair weights (or resistances). Diagonal is identically zero and
// is skipped by every normalization.
struct WeightMatrix {
  SquareMatrix w;
  int n() const { return w.size(); }
  bool operator==(const WeightMatrix&) const = default;
};

// Row-stochastic visit probabilities, zero diagonal.
struct ProbabilityMatrix {
  SquareMatrix p;
  int n() const { return p.size(); }
  bool operator==(const ProbabilityMatrix&) const = default;
};

// Row tolerance for "sums to one" checks.
inline constexpr double kRowSumTol = 1e-12;

// All-w0 off-diagonal start state. Throws std::invalid_argument for n < 2
// or w0 <= 0.
WeightMatrix uniform_weights(int n, double w0);

// Rejects negative entries and nonzero diagonals. allow_negative relaxes the
// sign check (log-likelihood weights may go negative).
void validate_weights(const WeightMatrix& wm, bool allow_negative = false);

// Checks zero diagonal, entries in [0,1], rows summing to 1 within
// kRowSumTol.
void validate_probabilities(const ProbabilityMatrix& pm);

}  // namespace netform

#endif  // NETFORM_MATRIX_HPP

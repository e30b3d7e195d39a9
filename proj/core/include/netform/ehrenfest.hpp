#ifndef NETFORM_EHRENFEST_HPP
#define NETFORM_EHRENFEST_HPP

#include <vector>

namespace netform {

// Two-urn ball-transfer chain on states 0..N (balls in the first urn).
// For N = 2 the transition matrix is
//   [ 0   1   0 ]
//   [ 1/2 0  1/2]
//   [ 0   1   0 ]
// with stationary vector (1/4, 1/2, 1/4).
std::vector<std::vector<double>> ehrenfest_transition_matrix(int n_balls);

// Unique stationary vector of the chain, solved exactly by linear algebra
// (the chain is periodic, so plain power iteration on P would not settle).
std::vector<double> ehrenfest_stationary(int n_balls);

// Total-variation distance to the stationary law after `steps` steps of the
// lazy chain (P + I)/2, started from the all-balls-in-one-urn state. The
// lazy walk shares the stationary vector and removes the parity flip.
double ehrenfest_lazy_tv_from_extreme(int n_balls, int steps);

}  // namespace netform

#endif  // NETFORM_EHRENFEST_HPP

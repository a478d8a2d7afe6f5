#pragma once

#include <cstdint>
#include <vector>

#include "welch/frames.hpp"

namespace welch::design {

/// Parameters of a frame-potential minimization run.
struct DesignConfig {
  int n = 2;  ///< target dimension
  int m = 2;  ///< number of vectors, >= 2
  int k = 1;  ///< potential order
  int restarts = 20;
  int max_iters = 5000;
  double rel_slack_tol = 1e-7;
  std::uint64_t seed = 0;
  double initial_step = 1.0;
  double backtrack = 0.5;
  double min_step = 1e-14;
};

struct DesignResult {
  frames::FrameSet frame;
  double achieved_potential = 0.0;
  double bound = 0.0;
  double relative_slack = 0.0;
  int iterations = 0;     ///< accepted iterations of the winning restart
  int restart_index = 0;  ///< which restart produced the result
  bool converged = false;
  std::vector<double> trace;  ///< potential after each accepted step (winning restart)
};

/// Order-k frame potential sum_{i,j} |<x_i,x_j>|^{2k}. Defined for arbitrary
/// vectors; comparable against welch_bound when the frame is unit-norm.
double frame_potential(const frames::FrameSet& x, int k);

/// Gradient of the frame potential with respect to the real and imaginary
/// parts of every coordinate, packed as a complex d x m matrix (column l is
/// the gradient for x_l). Column l equals
///   4k sum_j |<x_l,x_j>|^{2(k-1)} <x_j,x_l> x_j.
Eigen::MatrixXcd potential_gradient(const frames::FrameSet& x, int k);

/// Minimize the order-k frame potential over m unit vectors in C^n by
/// projected gradient descent with backtracking line search and
/// renormalization retraction, restarted from seeded random frames. Returns
/// the best result over all restarts; `converged` reports whether its
/// relative slack against the Welch bound is within rel_slack_tol.
DesignResult minimize(const DesignConfig& config);

}  // namespace welch::design

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "welch/frames.hpp"
#include "welch/linalg.hpp"

namespace welch::generalized {

/// Weighted set of unit vectors on the sphere of C^n, modeling a discrete
/// measure on CP^{n-1}. Points are stored as unit columns, weights are
/// non-negative with at least one positive entry.
class DiscreteMeasure {
 public:
  DiscreteMeasure(Eigen::MatrixXcd points, Eigen::VectorXd weights);

  /// Uniform weights 1/m on the vectors of a unit-norm frame.
  static DiscreteMeasure uniform(const frames::FrameSet& x);

  int dim() const { return static_cast<int>(points_.rows()); }
  int size() const { return static_cast<int>(points_.cols()); }
  const Eigen::MatrixXcd& points() const { return points_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  double total_weight() const { return total_weight_; }

 private:
  Eigen::MatrixXcd points_;
  Eigen::VectorXd weights_;
  double total_weight_;
};

/// Deterministic stream of Haar-uniform unit vectors in C^n (normalized
/// complex Gaussians). Same seed, same stream.
class HaarSampler {
 public:
  HaarSampler(int n, std::uint64_t seed);

  Eigen::VectorXcd sample();
  int dim() const { return n_; }
  std::uint64_t count() const { return counter_; }

 private:
  int n_;
  std::uint64_t counter_ = 0;
  std::mt19937_64 rng_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

/// Monte-Carlo estimate with its standard error.
struct McEstimate {
  long long samples = 0;
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Monte-Carlo estimate of the double Haar integral of |<x,y>|^{2k} over
/// independent pairs. Sampling is partitioned into fixed-size chunks with
/// independent substreams, accumulated in chunk order, so the result depends
/// only on (n, k, pairs, seed) and not on the thread schedule.
McEstimate mc_coherence_integral(int n, int k, long long pairs,
                                 std::uint64_t seed);

/// Weighted order-k coherence of a discrete measure:
/// sum_{i,l} w_i w_l |<x_i,x_l>|^{2k} / (sum_j w_j)^2.
double measure_potential(const DiscreteMeasure& mu, int k);

/// Metric operator of the lifted generalized frame on Sym^k(C^n):
/// (1/sum w) sum_i w_i lift(x_i,k) lift(x_i,k)^*. Its trace is 1.
linalg::HermitianMatrix generalized_metric(const DiscreteMeasure& mu, int k);

struct TDesignOrderCheck {
  int k = 0;
  long long dim = 1;          ///< sym_dim(n, k)
  double max_abs_dev = 0.0;   ///< max entry of |metric - I/dim|
  bool exact_pass = false;
  double mc_max_sigma = 0.0;  ///< worst Monte-Carlo deviation in standard errors
  bool mc_pass = false;
};

struct TDesignReport {
  int t = 0;
  int n = 0;
  bool pass = false;  ///< exact criterion holding for every k <= t
  std::vector<TDesignOrderCheck> per_k;
};

/// Projective t-design check against the ambient dimension of the measure.
///
/// For each k <= t the exact criterion asks generalized_metric(mu, k) to be
/// I / sym_dim(n,k) within tol entrywise. A Monte-Carlo cross-check compares
/// the measure average of g(x) = |<x,y>|^{2k} for random directions y against
/// a Haar estimate of the same integral, within 3 standard errors. The k = 0
/// row is included for completeness and always passes for a normalized
/// measure. The overall verdict is the exact criterion alone.
TDesignReport tdesign_check(const DiscreteMeasure& mu, int t, double tol = 1e-8,
                            std::uint64_t seed = 0x77656c6368ULL,
                            long long mc_samples = 20000, int directions = 3);

}  // namespace welch::generalized

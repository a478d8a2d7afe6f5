#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "welch/linalg.hpp"

namespace welch::frames {

/// m complex vectors in ambient dimension d, stored as the columns of a
/// d x m matrix. `unit_norm` records (and validates) that every column has
/// norm 1 within 1e-10.
class FrameSet {
 public:
  FrameSet(Eigen::MatrixXcd columns, bool unit_norm);

  static FrameSet from_vectors(const std::vector<Eigen::VectorXcd>& vectors,
                               bool unit_norm);
  static bool all_unit_norm(const Eigen::MatrixXcd& columns, double tol = 1e-10);

  int ambient_dim() const { return static_cast<int>(columns_.rows()); }
  int count() const { return static_cast<int>(columns_.cols()); }
  bool unit_norm() const { return unit_norm_; }
  const Eigen::MatrixXcd& columns() const { return columns_; }
  Eigen::VectorXcd vector(int i) const { return columns_.col(i); }

 private:
  Eigen::MatrixXcd columns_;
  bool unit_norm_;
};

/// Hermitian PSD matrix of pairwise inner products; hadamard_order tracks how
/// many entrywise powers have been applied (1 for the plain grammian).
struct GramMatrix {
  linalg::HermitianMatrix matrix;
  int hadamard_order = 1;

  int size() const { return matrix.dim(); }
};

/// Per-order slice of a WelchReport. cmax, cmax_pair and equiangular do not
/// depend on k but are repeated so each row is self-contained (the CSV output
/// is one such row per k).
struct OrderReport {
  int k = 1;
  double lhs_sum = 0.0;         // sum_{i,j} |<x_i,x_j>|^{2k}
  double bound = 0.0;           // m^2 / binom(n+k-1, k)
  double relative_slack = 0.0;  // (lhs_sum - bound) / bound
  bool nontrivial = false;      // m > binom(n+k-1, k)
  bool tight = false;
  double cmax = 0.0;
  std::optional<std::pair<int, int>> cmax_pair;
  std::optional<double> cmax_bound;  // bound on cmax^{2k}; may be negative
                                     // (vacuous, nontrivial=false); none for m=1
  bool equiangular = false;
};

struct WelchReport {
  int m = 0;  // number of vectors
  int d = 0;  // ambient dimension
  int n = 0;  // spanning dimension (numeric rank of the grammian)
  std::vector<OrderReport> per_k;
};

/// Per-order slice of the general-norm (ratio form) report.
struct GeneralOrderReport {
  int k = 1;
  double ratio = 0.0;  // lhs / (sum ||x_i||^{2k})^2
  double bound = 0.0;  // 1 / binom(n+k-1, k)
  double relative_slack = 0.0;
};

struct GeneralWelchReport {
  int m = 0;
  int d = 0;
  int n = 0;
  std::vector<GeneralOrderReport> per_k;
};

/// Grammian G(i,j) = <x_i, x_j>, conjugate-linear in the first argument.
GramMatrix gram(const FrameSet& x);

/// Entrywise k-th power; PSD by the Schur product theorem.
GramMatrix hadamard_power(const GramMatrix& g, int k);

/// m^2 / binom(n+k-1, k), the lower bound on the order-k frame potential of
/// m unit vectors spanning dimension n.
double welch_bound(long long m, long long n, int k);

/// (m/binom(n+k-1,k) - 1) / (m-1), the lower bound on cmax^{2k}. May be
/// negative (vacuous). Throws std::domain_error for m = 1.
double cmax_bound(long long m, long long n, int k);

/// Full per-order analysis of a unit-norm frame: achieved potentials, bounds,
/// slacks, tightness and equiangularity certificates. `tol` controls the
/// eigenvalue-spread tightness test and the equiangularity test.
WelchReport analyze(const FrameSet& x, int k_max = 4, double tol = 1e-8);

/// Ratio-form analysis for frames of arbitrary nonzero vectors.
GeneralWelchReport analyze_general(const FrameSet& x, int k_max = 4);

/// Metric operator sum_i x_i x_i^* (d x d).
linalg::HermitianMatrix metric(const FrameSet& x);

/// True iff the sorted nonzero spectra of the grammian (m x m) and the metric
/// operator (d x d) agree elementwise within tol.
bool eigen_duality_check(const FrameSet& x, double tol = 1e-9);

}  // namespace welch::frames

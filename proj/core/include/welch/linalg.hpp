#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace welch {

using Complex = std::complex<double>;

/// Malformed numeric input: non-finite entries, shape mismatches, bad files.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A stated precondition on the data does not hold (e.g. claimed unit norm).
struct ValidationError : InputError {
  using InputError::InputError;
};

/// A matrix required to be positive semidefinite has an eigenvalue below
/// the admissible tolerance.
struct NotPositiveSemidefiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A linear system is rank-deficient; carries the kernel dimension so callers
/// can report how many degrees of freedom are unconstrained.
class RankDeficiencyError : public std::runtime_error {
 public:
  RankDeficiencyError(const std::string& what, int kernel_dim)
      : std::runtime_error(what), kernel_dim_(kernel_dim) {}
  int kernel_dim() const noexcept { return kernel_dim_; }

 private:
  int kernel_dim_;
};

namespace linalg {

/// Square complex matrix validated to be Hermitian on construction.
///
/// Entries must be finite and satisfy A(i,j) = conj(A(j,i)) within `herm_tol`
/// relative to the largest entry magnitude. After validation the matrix is
/// symmetrized exactly, so mat() satisfies the Hermitian identity to the last
/// bit and the diagonal is purely real.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Eigen::MatrixXcd entries, double herm_tol = 1e-12);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXcd& mat() const { return mat_; }

 private:
  Eigen::MatrixXcd mat_;
};

/// Eigenvalues sorted descending; eigenvector columns match that order.
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
};

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// Stops when the off-diagonal Hilbert-Schmidt norm drops below
/// 1e-14 * ||A||_HS (at most 100 sweeps). Reconstruction error is bounded by
/// 1e-10 * (1 + ||A||_HS) for the dimensions this library targets.
EigenDecomposition hermitian_eig(const HermitianMatrix& a);

/// Number of eigenvalues with |lambda| > rel_tol * max(1, |lambda|_max) * dim.
int numeric_rank(const EigenDecomposition& eig, double rel_tol = 1e-10);

/// Squared Hilbert-Schmidt (Frobenius) norm, sum of |A(i,j)|^2.
double hs_norm_sq(const Eigen::MatrixXcd& a);
double hs_norm_sq(const HermitianMatrix& a);

Complex trace(const Eigen::MatrixXcd& a);
Complex trace(const HermitianMatrix& a);

/// True when the nonzero eigenvalues are equal within `spread_tol` relative
/// spread, which is the equality case of ||T||^2 >= |tr T|^2 / rank for PSD T.
bool equal_nonzero_spectrum(const EigenDecomposition& eig,
                            double spread_tol = 1e-9,
                            double rank_rel_tol = 1e-10);

}  // namespace linalg
}  // namespace welch

#include "welch/gramfactor.hpp"

#include <cmath>

namespace welch::gramfactor {

frames::FrameSet frame_from_gram(const linalg::HermitianMatrix& g,
                                 double rel_tol) {
  if (rel_tol <= 0.0) throw InputError("frame_from_gram: rel_tol must be positive");

  const auto eig = linalg::hermitian_eig(g);
  const double lmax = eig.eigenvalues.cwiseAbs().maxCoeff();
  const double lmin = eig.eigenvalues.minCoeff();
  if (lmin < -rel_tol * std::max(1.0, lmax))
    throw NotPositiveSemidefiniteError(
        "frame_from_gram: matrix has eigenvalue " + std::to_string(lmin) +
        " below the PSD tolerance");

  const int rank = linalg::numeric_rank(eig, rel_tol);
  if (rank == 0)
    throw InputError("frame_from_gram: zero matrix has no frame factorization");

  const int m = g.dim();
  // Row i of U sqrt(D), conjugated so that <x_i, x_j> = G(i,j) under the
  // convention that the inner product conjugates its first argument.
  // Eigenvalues within tolerance of zero were truncated; tiny negatives among
  // the kept ones are clamped before the square root.
  Eigen::MatrixXcd cols(rank, m);
  for (int c = 0; c < rank; ++c) {
    const double scale = std::sqrt(std::max(0.0, eig.eigenvalues(c)));
    for (int i = 0; i < m; ++i)
      cols(c, i) = scale * std::conj(eig.eigenvectors(i, c));
  }

  const bool unit = frames::FrameSet::all_unit_norm(cols);
  return frames::FrameSet(std::move(cols), unit);
}

}  // namespace welch::gramfactor

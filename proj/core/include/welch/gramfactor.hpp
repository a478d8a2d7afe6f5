#pragma once

#include "welch/frames.hpp"
#include "welch/linalg.hpp"

namespace welch::gramfactor {

/// Recover a frame realizing a prescribed Gram matrix.
///
/// Writes G = U D U* and returns the m vectors formed from the rows of
/// U sqrt(D) restricted to the rank(G) columns of nonzero eigenvalue, so that
/// <x_i, x_j> = G(i,j). The ambient dimension of the output equals the
/// numeric rank of G; any common unitary applied to the output is an equally
/// valid factorization, so callers should compare Gram matrices rather than
/// raw vectors.
///
/// Throws NotPositiveSemidefiniteError when G has an eigenvalue below
/// -rel_tol * lambda_max, and InputError for a numerically zero matrix.
frames::FrameSet frame_from_gram(const linalg::HermitianMatrix& g,
                                 double rel_tol = 1e-10);

}  // namespace welch::gramfactor

#pragma once

#include "welch/frames.hpp"
#include "welch/symtensor.hpp"

namespace welch::polysample {

/// Homogeneous polynomial of total degree k in the n conjugated variables
/// conj(z_1), ..., conj(z_n):
///
///   p(z) = sum_alpha coeffs[alpha] * prod_i conj(z_i)^{alpha_i}
///
/// Coefficients live in the plain monomial basis ordered like
/// symtensor::multi_indices(n, k). Note the conjugate-variable convention: it
/// makes p_w(z) = <z, w>^k a polynomial with coefficients independent of
/// conj(w), which differs from the common holomorphic convention.
struct HomogeneousPolynomial {
  int n = 0;
  int k = 0;
  Eigen::VectorXcd coeffs;
};

/// p(z) = <z, w>^k expanded into monomial coefficients.
HomogeneousPolynomial poly_from_direction(const Eigen::VectorXcd& w, int k);

/// Conversion between monomial coefficients and the orthonormal Sym^k basis;
/// the square-root multinomial diagonal lives here and nowhere else.
symtensor::SymVector sym_from_poly(const HomogeneousPolynomial& p);
HomogeneousPolynomial poly_from_sym(const symtensor::SymVector& v);

Complex eval_poly(const HomogeneousPolynomial& p, const Eigen::VectorXcd& z);

/// Sampling operator: row i maps monomial coefficients to the value at x_i,
/// i.e. entry (i, alpha) = prod_p conj(x_i^{(p)})^{alpha_p}. Shape
/// m x sym_dim(d, k).
Eigen::MatrixXcd sampling_matrix(const frames::FrameSet& x, int k);

/// True iff samples at the frame points determine a degree-k polynomial in
/// the ambient variables uniquely: numeric rank of the sampling matrix equals
/// sym_dim(ambient_dim, k).
bool is_uniquely_sampled(const frames::FrameSet& x, int k,
                         double rel_tol = 1e-10);

/// Least-squares recovery of the polynomial from its samples via the normal
/// equations. Throws RankDeficiencyError (with the kernel dimension) when the
/// frame does not sample uniquely.
HomogeneousPolynomial reconstruct(const Eigen::VectorXcd& samples,
                                  const frames::FrameSet& x, int k,
                                  double rel_tol = 1e-10);

/// A unit-coefficient polynomial annihilated by sampling at the frame points,
/// from the smallest eigenvector of the normal matrix. Throws
/// std::domain_error when the frame samples uniquely (no kernel).
HomogeneousPolynomial kernel_polynomial(const frames::FrameSet& x, int k,
                                        double rel_tol = 1e-10);

}  // namespace welch::polysample

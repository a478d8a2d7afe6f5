#pragma once

#include <vector>

#include "welch/frames.hpp"
#include "welch/linalg.hpp"

namespace welch::symtensor {

/// Exact binomial coefficient. Throws std::overflow_error past 2^53, the
/// largest range where every intermediate stays exactly representable later
/// as a double.
long long binomial(long long n, long long k);

/// dim Sym^k of an n-dimensional space: binomial(n+k-1, k).
long long sym_dim(long long n, long long k);

/// Exponent vector alpha with sum(alpha) = degree.
struct MultiIndex {
  std::vector<int> exponents;

  int degree() const;
  bool operator==(const MultiIndex& other) const = default;
};

/// All multi-indices of degree k in n variables, in decreasing lexicographic
/// order: (k,0,...,0) first, (0,...,0,k) last. This is the canonical basis
/// order used for SymVector coordinates and polynomial coefficients.
std::vector<MultiIndex> multi_indices(int n, int k);

/// sqrt(k! / (alpha_1! ... alpha_n!)) for each multi-index, in canonical
/// order. The single place where the monomial <-> orthonormal-basis weights
/// are defined.
Eigen::VectorXd multinomial_weights(int n, int k);

/// Coordinates of a k-th tensor power in the orthonormal monomial basis of
/// Sym^k(C^n).
struct SymVector {
  int n = 0;
  int k = 0;
  Eigen::VectorXcd coords;
};

/// v^{otimes k} in coordinates: entry at alpha is
/// sqrt(k!/prod(alpha!)) * prod_i v_i^{alpha_i}. With this weighting
/// <lift(v), lift(w)> = <v,w>^k. k = 0 yields the scalar 1.
SymVector lift(const Eigen::VectorXcd& v, int k);

/// Columns lift(x_i, k) for every frame vector, sym_dim(d,k) x m.
Eigen::MatrixXcd lift_columns(const frames::FrameSet& x, int k);

/// Gram matrix of the lifted system {lift(x_i,k)}; equals the k-th Hadamard
/// power of gram(x) entrywise.
frames::GramMatrix lifted_gram(const frames::FrameSet& x, int k);

}  // namespace welch::symtensor

#include "welch/symtensor.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace welch::symtensor {

namespace {

constexpr long long kMaxExact = 1LL << 53;

long long checked_mul_div(long long acc, long long num, long long den) {
  // acc * num is always divisible by den when called along the binomial
  // recurrence binom(n,i) = binom(n,i-1) * (n-i+1) / i.
  const __int128 wide = static_cast<__int128>(acc) * num;
  const __int128 out = wide / den;
  if (out > kMaxExact)
    throw std::overflow_error("binomial: result exceeds 2^53");
  return static_cast<long long>(out);
}

}  // namespace

long long binomial(long long n, long long k) {
  if (n < 0 || k < 0) throw InputError("binomial: arguments must be non-negative");
  if (k > n) return 0;
  k = std::min(k, n - k);
  long long acc = 1;
  for (long long i = 1; i <= k; ++i) acc = checked_mul_div(acc, n - k + i, i);
  return acc;
}

long long sym_dim(long long n, long long k) {
  if (n < 1) throw InputError("sym_dim: dimension must be positive");
  if (k < 0) throw InputError("sym_dim: order must be non-negative");
  return binomial(n + k - 1, k);
}

int MultiIndex::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

std::vector<MultiIndex> multi_indices(int n, int k) {
  if (n < 1) throw InputError("multi_indices: n must be positive");
  if (k < 0) throw InputError("multi_indices: k must be non-negative");
  std::vector<MultiIndex> out;
  out.reserve(static_cast<size_t>(sym_dim(n, k)));

  std::vector<int> alpha(n, 0);
  alpha[0] = k;
  out.push_back(MultiIndex{alpha});
  // Successor in decreasing lex order: take the rightmost nonzero entry
  // before the last position, decrement it, and move everything to its right
  // (plus one) into the next slot.
  while (alpha[n - 1] != k) {
    int h = n - 2;
    while (alpha[h] == 0) --h;
    int rest = 0;
    for (int j = h + 1; j < n; ++j) {
      rest += alpha[j];
      alpha[j] = 0;
    }
    alpha[h] -= 1;
    alpha[h + 1] = rest + 1;
    out.push_back(MultiIndex{alpha});
  }
  return out;
}

Eigen::VectorXd multinomial_weights(int n, int k) {
  const auto indices = multi_indices(n, k);
  Eigen::VectorXd w(indices.size());
  for (size_t a = 0; a < indices.size(); ++a) {
    // k! / prod(alpha_i!) as a product of binomials over partial sums.
    long long mult = 1;
    long long seen = 0;
    for (int e : indices[a].exponents) {
      seen += e;
      const __int128 wide = static_cast<__int128>(mult) * binomial(seen, e);
      if (wide > (1LL << 53)) throw std::overflow_error("multinomial exceeds 2^53");
      mult = static_cast<long long>(wide);
    }
    w(static_cast<Eigen::Index>(a)) = std::sqrt(static_cast<double>(mult));
  }
  return w;
}

SymVector lift(const Eigen::VectorXcd& v, int k) {
  const int n = static_cast<int>(v.size());
  if (n < 1) throw InputError("lift: vector must be non-empty");
  if (k < 0) throw InputError("lift: order must be non-negative");

  const auto indices = multi_indices(n, k);
  const Eigen::VectorXd weights = multinomial_weights(n, k);

  SymVector out;
  out.n = n;
  out.k = k;
  out.coords.resize(static_cast<Eigen::Index>(indices.size()));
  for (size_t a = 0; a < indices.size(); ++a) {
    Complex monomial(1.0, 0.0);
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < indices[a].exponents[i]; ++e) monomial *= v(i);
    out.coords(static_cast<Eigen::Index>(a)) =
        weights(static_cast<Eigen::Index>(a)) * monomial;
  }
  return out;
}

Eigen::MatrixXcd lift_columns(const frames::FrameSet& x, int k) {
  const Eigen::Index dim = sym_dim(x.ambient_dim(), k);
  Eigen::MatrixXcd cols(dim, x.count());
  for (int i = 0; i < x.count(); ++i) cols.col(i) = lift(x.vector(i), k).coords;
  return cols;
}

frames::GramMatrix lifted_gram(const frames::FrameSet& x, int k) {
  if (k < 1) throw InputError("lifted_gram: order must be positive");
  const Eigen::MatrixXcd lifts = lift_columns(x, k);
  return frames::GramMatrix{linalg::HermitianMatrix(lifts.adjoint() * lifts), k};
}

}  // namespace welch::symtensor

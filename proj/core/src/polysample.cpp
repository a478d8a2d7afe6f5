#include "welch/polysample.hpp"

#include <cmath>
#include <stdexcept>

namespace welch::polysample {

namespace {

bool all_finite(const Eigen::VectorXcd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) return false;
  return true;
}

void check_poly(const HomogeneousPolynomial& p) {
  if (p.n < 1 || p.k < 0)
    throw InputError("HomogeneousPolynomial: invalid n or k");
  if (p.coeffs.size() != symtensor::sym_dim(p.n, p.k))
    throw InputError("HomogeneousPolynomial: coefficient length must be sym_dim(n,k)");
  if (!all_finite(p.coeffs))
    throw InputError("HomogeneousPolynomial: coefficients must be finite");
}

Complex conj_monomial(const Eigen::VectorXcd& z,
                      const symtensor::MultiIndex& alpha) {
  Complex out(1.0, 0.0);
  for (size_t i = 0; i < alpha.exponents.size(); ++i)
    for (int e = 0; e < alpha.exponents[i]; ++e)
      out *= std::conj(z(static_cast<Eigen::Index>(i)));
  return out;
}

struct NormalSystem {
  Eigen::MatrixXcd matrix;  // S^H S
  linalg::EigenDecomposition eig;
  int rank = 0;
  long long dim = 0;
};

NormalSystem normal_system(const frames::FrameSet& x, int k, double rel_tol) {
  const Eigen::MatrixXcd s = sampling_matrix(x, k);
  NormalSystem sys;
  sys.dim = s.cols();
  sys.matrix = s.adjoint() * s;
  sys.eig = linalg::hermitian_eig(linalg::HermitianMatrix(sys.matrix));
  sys.rank = linalg::numeric_rank(sys.eig, rel_tol);
  return sys;
}

}  // namespace

HomogeneousPolynomial poly_from_direction(const Eigen::VectorXcd& w, int k) {
  if (k < 0) throw InputError("poly_from_direction: order must be non-negative");
  const int n = static_cast<int>(w.size());
  const auto indices = symtensor::multi_indices(n, k);
  const Eigen::VectorXd weights = symtensor::multinomial_weights(n, k);

  HomogeneousPolynomial p;
  p.n = n;
  p.k = k;
  p.coeffs.resize(static_cast<Eigen::Index>(indices.size()));
  for (size_t a = 0; a < indices.size(); ++a) {
    Complex monomial(1.0, 0.0);
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < indices[a].exponents[i]; ++e) monomial *= w(i);
    // multinomial coefficient = weight^2
    const double mult = weights(static_cast<Eigen::Index>(a)) *
                        weights(static_cast<Eigen::Index>(a));
    p.coeffs(static_cast<Eigen::Index>(a)) = mult * monomial;
  }
  return p;
}

symtensor::SymVector sym_from_poly(const HomogeneousPolynomial& p) {
  check_poly(p);
  const Eigen::VectorXd w = symtensor::multinomial_weights(p.n, p.k);
  symtensor::SymVector v;
  v.n = p.n;
  v.k = p.k;
  v.coords = p.coeffs.cwiseQuotient(w.cast<Complex>());
  return v;
}

HomogeneousPolynomial poly_from_sym(const symtensor::SymVector& v) {
  const Eigen::VectorXd w = symtensor::multinomial_weights(v.n, v.k);
  if (v.coords.size() != w.size())
    throw InputError("poly_from_sym: coordinate length must be sym_dim(n,k)");
  HomogeneousPolynomial p;
  p.n = v.n;
  p.k = v.k;
  p.coeffs = v.coords.cwiseProduct(w.cast<Complex>());
  return p;
}

Complex eval_poly(const HomogeneousPolynomial& p, const Eigen::VectorXcd& z) {
  check_poly(p);
  if (z.size() != p.n)
    throw InputError("eval_poly: point dimension must match the polynomial");
  const auto indices = symtensor::multi_indices(p.n, p.k);
  Complex out(0.0, 0.0);
  for (size_t a = 0; a < indices.size(); ++a)
    out += p.coeffs(static_cast<Eigen::Index>(a)) * conj_monomial(z, indices[a]);
  return out;
}

Eigen::MatrixXcd sampling_matrix(const frames::FrameSet& x, int k) {
  if (k < 0) throw InputError("sampling_matrix: order must be non-negative");
  const int n = x.ambient_dim();
  const auto indices = symtensor::multi_indices(n, k);
  Eigen::MatrixXcd s(x.count(), static_cast<Eigen::Index>(indices.size()));
  for (int i = 0; i < x.count(); ++i) {
    const Eigen::VectorXcd xi = x.vector(i);
    for (size_t a = 0; a < indices.size(); ++a)
      s(i, static_cast<Eigen::Index>(a)) = conj_monomial(xi, indices[a]);
  }
  return s;
}

bool is_uniquely_sampled(const frames::FrameSet& x, int k, double rel_tol) {
  const long long dim = symtensor::sym_dim(x.ambient_dim(), k);
  if (x.count() < dim) return false;  // too few samples regardless of position
  const auto sys = normal_system(x, k, rel_tol);
  return sys.rank == sys.dim;
}

HomogeneousPolynomial reconstruct(const Eigen::VectorXcd& samples,
                                  const frames::FrameSet& x, int k,
                                  double rel_tol) {
  if (samples.size() != x.count())
    throw InputError("reconstruct: need exactly one sample per frame vector");
  if (!all_finite(samples)) throw InputError("reconstruct: samples must be finite");

  const auto sys = normal_system(x, k, rel_tol);
  if (sys.rank < sys.dim)
    throw RankDeficiencyError(
        "reconstruct: frame does not sample degree-" + std::to_string(k) +
            " polynomials uniquely (kernel dimension " +
            std::to_string(sys.dim - sys.rank) + ")",
        static_cast<int>(sys.dim - sys.rank));

  const Eigen::MatrixXcd s = sampling_matrix(x, k);
  const Eigen::VectorXcd rhs = s.adjoint() * samples;

  // c = Q diag(1/lambda) Q^H rhs over the retained spectrum.
  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(sys.dim);
  for (int i = 0; i < sys.rank; ++i) {
    const Eigen::VectorXcd q = sys.eig.eigenvectors.col(i);
    coeffs += (q.dot(rhs) / sys.eig.eigenvalues(i)) * q;
  }

  HomogeneousPolynomial p;
  p.n = x.ambient_dim();
  p.k = k;
  p.coeffs = std::move(coeffs);
  return p;
}

HomogeneousPolynomial kernel_polynomial(const frames::FrameSet& x, int k,
                                        double rel_tol) {
  const auto sys = normal_system(x, k, rel_tol);
  if (sys.rank == sys.dim)
    throw std::domain_error("kernel_polynomial: sampling is unique, kernel is trivial");

  HomogeneousPolynomial p;
  p.n = x.ambient_dim();
  p.k = k;
  p.coeffs = sys.eig.eigenvectors.col(sys.eig.dim() - 1);  // smallest eigenvalue
  return p;
}

}  // namespace welch::polysample

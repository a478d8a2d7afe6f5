#include "welch/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace welch::linalg {

namespace {

bool all_finite(const Eigen::MatrixXcd& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
        return false;
  return true;
}

double off_diag_norm_sq(const Eigen::MatrixXcd& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

}  // namespace

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd entries, double herm_tol)
    : mat_(std::move(entries)) {
  if (mat_.rows() == 0 || mat_.rows() != mat_.cols())
    throw InputError("HermitianMatrix: matrix must be square and non-empty");
  if (!all_finite(mat_))
    throw InputError("HermitianMatrix: entries must be finite");
  const double scale = std::max(1.0, mat_.cwiseAbs().maxCoeff());
  const double dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 2.0 * herm_tol * scale)
    throw InputError("HermitianMatrix: not Hermitian within tolerance (max deviation " +
                     std::to_string(dev) + ")");
  mat_ = 0.5 * (mat_ + mat_.adjoint()).eval();
  for (Eigen::Index i = 0; i < mat_.rows(); ++i)
    mat_(i, i) = Complex(mat_(i, i).real(), 0.0);
}

EigenDecomposition hermitian_eig(const HermitianMatrix& h) {
  const int n = h.dim();
  Eigen::MatrixXcd a = h.mat();
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);

  const double total_norm = std::sqrt(hs_norm_sq(a));
  const double stop = 1e-14 * total_norm;
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps && n > 1; ++sweep) {
    if (std::sqrt(off_diag_norm_sq(a)) <= stop) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;

        // Unitary 2x2 rotation J with J(p,p)=J(q,q)=c, J(p,q)=s,
        // J(q,p)=-conj(s) chosen so that (J^H A J)(p,q) = 0. The phase of
        // a(p,q) is folded into s; t solves t^2 + 2*zeta*t - 1 = 0.
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double zeta = (aqq - app) / (2.0 * r);
        const double root = std::sqrt(zeta * zeta + 1.0);
        const double t = (zeta >= 0.0) ? 1.0 / (zeta + root) : 1.0 / (zeta - root);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Complex s = (t * c) * (apq / r);

        // A <- A J (columns p and q).
        for (int i = 0; i < n; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip - std::conj(s) * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        // A <- J^H A (rows p and q).
        for (int j = 0; j < n; ++j) {
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = c * apj - s * aqj;
          a(q, j) = std::conj(s) * apj + c * aqj;
        }
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);

        // V <- V J.
        for (int i = 0; i < n; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip - std::conj(s) * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues(i) = a(order[i], order[i]).real();
    out.eigenvectors.col(i) = v.col(order[i]);
  }
  return out;
}

int numeric_rank(const EigenDecomposition& eig, double rel_tol) {
  if (rel_tol <= 0.0) throw InputError("numeric_rank: rel_tol must be positive");
  if (eig.dim() == 0) return 0;
  const double lmax = eig.eigenvalues.cwiseAbs().maxCoeff();
  const double threshold = rel_tol * std::max(1.0, lmax) * eig.dim();
  int rank = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
    if (std::abs(eig.eigenvalues(i)) > threshold) ++rank;
  return rank;
}

double hs_norm_sq(const Eigen::MatrixXcd& a) { return a.squaredNorm(); }
double hs_norm_sq(const HermitianMatrix& a) { return a.mat().squaredNorm(); }

Complex trace(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw InputError("trace: matrix must be square");
  return a.trace();
}
Complex trace(const HermitianMatrix& a) { return a.mat().trace(); }

bool equal_nonzero_spectrum(const EigenDecomposition& eig, double spread_tol,
                            double rank_rel_tol) {
  if (eig.dim() == 0) return true;
  const double lmax = eig.eigenvalues.cwiseAbs().maxCoeff();
  const double threshold = rank_rel_tol * std::max(1.0, lmax) * eig.dim();
  bool any = false;
  double lo = 0.0, hi = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues(i);
    if (std::abs(lambda) <= threshold) continue;
    if (!any) {
      lo = hi = lambda;
      any = true;
    } else {
      lo = std::min(lo, lambda);
      hi = std::max(hi, lambda);
    }
  }
  if (!any) return true;
  const double scale = std::max(std::abs(lo), std::abs(hi));
  return (hi - lo) <= spread_tol * scale;
}

}  // namespace welch::linalg

#include "welch/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "welch/symtensor.hpp"

namespace welch::frames {

namespace {

bool all_finite(const Eigen::MatrixXcd& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
        return false;
  return true;
}

double pow_ll(double base, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

Complex pow_ll(Complex base, int k) {
  Complex out(1.0, 0.0);
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

int spanning_dim(const GramMatrix& g) {
  return linalg::numeric_rank(linalg::hermitian_eig(g.matrix));
}

}  // namespace

FrameSet::FrameSet(Eigen::MatrixXcd columns, bool unit_norm)
    : columns_(std::move(columns)), unit_norm_(unit_norm) {
  if (columns_.rows() < 1 || columns_.cols() < 1)
    throw InputError("FrameSet: needs at least one vector of dimension >= 1");
  if (!all_finite(columns_))
    throw InputError("FrameSet: entries must be finite");
  if (unit_norm_ && !all_unit_norm(columns_))
    throw ValidationError("FrameSet: unit_norm claimed but a vector deviates from norm 1");
}

FrameSet FrameSet::from_vectors(const std::vector<Eigen::VectorXcd>& vectors,
                                bool unit_norm) {
  if (vectors.empty()) throw InputError("FrameSet: empty vector list");
  Eigen::MatrixXcd cols(vectors.front().size(), vectors.size());
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != cols.rows())
      throw InputError("FrameSet: vectors must share one dimension");
    cols.col(static_cast<Eigen::Index>(i)) = vectors[i];
  }
  return FrameSet(std::move(cols), unit_norm);
}

bool FrameSet::all_unit_norm(const Eigen::MatrixXcd& columns, double tol) {
  for (Eigen::Index i = 0; i < columns.cols(); ++i)
    if (std::abs(columns.col(i).norm() - 1.0) > tol) return false;
  return true;
}

GramMatrix gram(const FrameSet& x) {
  return GramMatrix{linalg::HermitianMatrix(x.columns().adjoint() * x.columns()), 1};
}

GramMatrix hadamard_power(const GramMatrix& g, int k) {
  if (k < 1) throw InputError("hadamard_power: order must be positive");
  Eigen::MatrixXcd powered = g.matrix.mat().unaryExpr(
      [k](const Complex& c) { return pow_ll(c, k); });
  return GramMatrix{linalg::HermitianMatrix(std::move(powered)),
                    g.hadamard_order * k};
}

double welch_bound(long long m, long long n, int k) {
  if (m < 1 || n < 1 || k < 1)
    throw InputError("welch_bound: m, n, k must be positive");
  return static_cast<double>(m) * static_cast<double>(m) /
         static_cast<double>(symtensor::sym_dim(n, k));
}

double cmax_bound(long long m, long long n, int k) {
  if (m < 1 || n < 1 || k < 1)
    throw InputError("cmax_bound: m, n, k must be positive");
  if (m == 1)
    throw std::domain_error("cmax_bound: undefined for a single vector (m = 1)");
  const double dim = static_cast<double>(symtensor::sym_dim(n, k));
  return (static_cast<double>(m) / dim - 1.0) / (static_cast<double>(m) - 1.0);
}

WelchReport analyze(const FrameSet& x, int k_max, double tol) {
  if (k_max < 1) throw InputError("analyze: k_max must be positive");
  if (tol <= 0.0) throw InputError("analyze: tol must be positive");
  if (!FrameSet::all_unit_norm(x.columns()))
    throw ValidationError("analyze: frame vectors must have unit norm");

  const int m = x.count();
  const GramMatrix g = gram(x);
  const int n = spanning_dim(g);

  WelchReport report;
  report.m = m;
  report.d = x.ambient_dim();
  report.n = n;

  // Off-diagonal magnitudes: cmax with its lexicographically first pair, and
  // the equiangularity spread. Vacuous (m = 1) frames are equiangular.
  double cmax = 0.0;
  double cmin = std::numeric_limits<double>::infinity();
  std::optional<std::pair<int, int>> cmax_pair;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const double mag = std::abs(g.matrix.mat()(i, j));
      if (!cmax_pair || mag > cmax) {
        cmax = mag;
        cmax_pair = {i, j};
      }
      cmin = std::min(cmin, mag);
    }
  }
  const bool equiangular = !cmax_pair || (cmax - cmin) <= tol;

  for (int k = 1; k <= k_max; ++k) {
    OrderReport row;
    row.k = k;
    const GramMatrix gk = (k == 1) ? g : hadamard_power(g, k);
    row.lhs_sum = linalg::hs_norm_sq(gk.matrix);
    const long long dim_k = symtensor::sym_dim(n, k);
    row.bound = welch_bound(m, n, k);
    row.relative_slack = (row.lhs_sum - row.bound) / row.bound;
    row.nontrivial = m > dim_k;
    row.cmax = cmax;
    row.cmax_pair = cmax_pair;
    if (m > 1) row.cmax_bound = cmax_bound(m, n, k);
    row.equiangular = equiangular;

    // Tightness: nonzero eigenvalues of G^{o k} must agree among themselves
    // (relative spread) and their common value must be m / binom(n+k-1,k).
    const auto eig = linalg::hermitian_eig(gk.matrix);
    const int rank_k = linalg::numeric_rank(eig);
    if (rank_k > 0) {
      const double target = static_cast<double>(m) / static_cast<double>(dim_k);
      const bool spread_ok = linalg::equal_nonzero_spectrum(eig, tol);
      const double mean =
          eig.eigenvalues.head(rank_k).sum() / static_cast<double>(rank_k);
      row.tight = spread_ok && std::abs(mean - target) <= tol * target;
    }
    report.per_k.push_back(std::move(row));
  }
  return report;
}

GeneralWelchReport analyze_general(const FrameSet& x, int k_max) {
  if (k_max < 1) throw InputError("analyze_general: k_max must be positive");
  for (int i = 0; i < x.count(); ++i)
    if (x.columns().col(i).squaredNorm() == 0.0)
      throw ValidationError("analyze_general: zero vector at index " + std::to_string(i));

  const GramMatrix g = gram(x);
  const int n = spanning_dim(g);

  GeneralWelchReport report;
  report.m = x.count();
  report.d = x.ambient_dim();
  report.n = n;

  for (int k = 1; k <= k_max; ++k) {
    const GramMatrix gk = (k == 1) ? g : hadamard_power(g, k);
    double norm_sum = 0.0;
    for (int i = 0; i < x.count(); ++i)
      norm_sum += pow_ll(g.matrix.mat()(i, i).real(), k);

    GeneralOrderReport row;
    row.k = k;
    row.ratio = linalg::hs_norm_sq(gk.matrix) / (norm_sum * norm_sum);
    row.bound = 1.0 / static_cast<double>(symtensor::sym_dim(n, k));
    row.relative_slack = (row.ratio - row.bound) / row.bound;
    report.per_k.push_back(row);
  }
  return report;
}

linalg::HermitianMatrix metric(const FrameSet& x) {
  return linalg::HermitianMatrix(x.columns() * x.columns().adjoint());
}

bool eigen_duality_check(const FrameSet& x, double tol) {
  const auto eg = linalg::hermitian_eig(gram(x).matrix);
  const auto ef = linalg::hermitian_eig(metric(x));
  const int rank_g = linalg::numeric_rank(eg);
  const int rank_f = linalg::numeric_rank(ef);
  if (rank_g != rank_f) return false;
  for (int i = 0; i < rank_g; ++i) {
    const double a = eg.eigenvalues(i);
    const double b = ef.eigenvalues(i);
    if (std::abs(a - b) > tol * std::max({1.0, std::abs(a), std::abs(b)}))
      return false;
  }
  return true;
}

}  // namespace welch::frames

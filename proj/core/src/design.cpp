#include "welch/design.hpp"

#include <cmath>
#include <random>

namespace welch::design {

namespace {

double pow_ll(double base, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double potential_of(const Eigen::MatrixXcd& cols, int k) {
  const Eigen::MatrixXcd c = cols.adjoint() * cols;
  double sum = 0.0;
  for (Eigen::Index j = 0; j < c.cols(); ++j)
    for (Eigen::Index i = 0; i < c.rows(); ++i) sum += pow_ll(std::norm(c(i, j)), k);
  return sum;
}

Eigen::MatrixXcd gradient_of(const Eigen::MatrixXcd& cols, int k) {
  const Eigen::MatrixXcd c = cols.adjoint() * cols;
  Eigen::MatrixXcd weighted = c.unaryExpr([k](const Complex& v) {
    return pow_ll(std::norm(v), k - 1) * v;
  });
  // Column l: 4k sum_j |c(l,j)|^{2(k-1)} conj(c(l,j)) x_j = 4k X weighted(:,l),
  // using c(j,l) = conj(c(l,j)).
  return (4.0 * k) * (cols * weighted);
}

// Project each gradient column onto the tangent space of its unit sphere.
// <x_l, grad_l> is real non-negative for the frame potential, so the real
// projection coincides with the complex one.
Eigen::MatrixXcd tangent_project(const Eigen::MatrixXcd& cols,
                                 const Eigen::MatrixXcd& grad) {
  Eigen::MatrixXcd out = grad;
  for (Eigen::Index l = 0; l < cols.cols(); ++l) {
    const double radial = cols.col(l).dot(grad.col(l)).real();
    out.col(l) -= radial * cols.col(l);
  }
  return out;
}

Eigen::MatrixXcd normalized_columns(Eigen::MatrixXcd cols) {
  for (Eigen::Index l = 0; l < cols.cols(); ++l) cols.col(l).normalize();
  return cols;
}

Eigen::MatrixXcd random_unit_columns(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd cols(n, m);
  for (int j = 0; j < m; ++j) {
    do {
      for (int i = 0; i < n; ++i) cols(i, j) = Complex(gauss(rng), gauss(rng));
    } while (cols.col(j).squaredNorm() == 0.0);
    cols.col(j).normalize();
  }
  return cols;
}

struct RestartOutcome {
  Eigen::MatrixXcd cols;
  double potential = 0.0;
  int iterations = 0;
  std::vector<double> trace;
};

RestartOutcome run_restart(const DesignConfig& cfg, double bound,
                           std::uint64_t seed) {
  constexpr double kArmijo = 1e-4;

  RestartOutcome out;
  out.cols = random_unit_columns(cfg.n, cfg.m, seed);
  out.potential = potential_of(out.cols, cfg.k);
  out.trace.push_back(out.potential);

  double step = cfg.initial_step;
  for (int it = 0; it < cfg.max_iters; ++it) {
    if ((out.potential - bound) / bound <= cfg.rel_slack_tol) break;

    const Eigen::MatrixXcd grad = gradient_of(out.cols, cfg.k);
    const Eigen::MatrixXcd direction = tangent_project(out.cols, grad);
    const double dir_sq = direction.squaredNorm();
    if (std::sqrt(dir_sq) <= 1e-13 * (1.0 + out.potential)) break;  // stationary

    bool accepted = false;
    double s = step;
    while (s >= cfg.min_step) {
      const Eigen::MatrixXcd candidate =
          normalized_columns(out.cols - s * direction);
      const double value = potential_of(candidate, cfg.k);
      if (value <= out.potential - kArmijo * s * dir_sq) {
        out.cols = candidate;
        out.potential = value;
        accepted = true;
        break;
      }
      s *= cfg.backtrack;
    }
    if (!accepted) break;

    out.iterations = it + 1;
    out.trace.push_back(out.potential);
    step = std::min(cfg.initial_step, 2.0 * s);
  }
  return out;
}

}  // namespace

double frame_potential(const frames::FrameSet& x, int k) {
  if (k < 1) throw InputError("frame_potential: order must be positive");
  return potential_of(x.columns(), k);
}

Eigen::MatrixXcd potential_gradient(const frames::FrameSet& x, int k) {
  if (k < 1) throw InputError("potential_gradient: order must be positive");
  return gradient_of(x.columns(), k);
}

DesignResult minimize(const DesignConfig& cfg) {
  if (cfg.n < 1 || cfg.k < 1) throw InputError("minimize: n and k must be positive");
  if (cfg.m < 2) throw InputError("minimize: m must be at least 2");
  if (cfg.restarts < 1) throw InputError("minimize: restarts must be at least 1");
  if (cfg.max_iters < 1) throw InputError("minimize: max_iters must be at least 1");
  if (cfg.rel_slack_tol <= 0.0)
    throw InputError("minimize: rel_slack_tol must be positive");
  if (cfg.initial_step <= 0.0 || cfg.backtrack <= 0.0 || cfg.backtrack >= 1.0 ||
      cfg.min_step <= 0.0)
    throw InputError("minimize: invalid step controls");

  const double bound = frames::welch_bound(cfg.m, cfg.n, cfg.k);

  RestartOutcome best;
  int best_index = -1;
  for (int r = 0; r < cfg.restarts; ++r) {
    RestartOutcome candidate = run_restart(cfg, bound, mix64(cfg.seed, r));
    if (best_index < 0 || candidate.potential < best.potential) {
      best = std::move(candidate);
      best_index = r;
    }
  }

  DesignResult result{frames::FrameSet(best.cols, true),
                      best.potential,
                      bound,
                      (best.potential - bound) / bound,
                      best.iterations,
                      best_index,
                      false,
                      std::move(best.trace)};
  result.converged = result.relative_slack <= cfg.rel_slack_tol;
  return result;
}

}  // namespace welch::design

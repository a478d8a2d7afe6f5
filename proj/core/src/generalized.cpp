#include "welch/generalized.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "welch/symtensor.hpp"

namespace welch::generalized {

namespace {

constexpr long long kChunkPairs = 8192;

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

struct ChunkMoments {
  double sum = 0.0;
  double sum_sq = 0.0;
};

// Integrand evaluated per pair drawn from one seeded substream.
template <typename PairFn>
McEstimate chunked_mc(long long total, std::uint64_t seed, PairFn&& value_of) {
  if (total < 1) throw InputError("Monte-Carlo sampling needs at least one pair");
  const long long chunks = (total + kChunkPairs - 1) / kChunkPairs;
  std::vector<ChunkMoments> moments(static_cast<size_t>(chunks));

  auto run_chunk = [&](long long c) {
    const long long begin = c * kChunkPairs;
    const long long count = std::min(kChunkPairs, total - begin);
    std::mt19937_64 rng(mix64(seed, static_cast<std::uint64_t>(c)));
    ChunkMoments m;
    for (long long i = 0; i < count; ++i) {
      const double g = value_of(rng);
      m.sum += g;
      m.sum_sq += g * g;
    }
    moments[static_cast<size_t>(c)] = m;
  };

  const unsigned hw = std::thread::hardware_concurrency();
  const long long workers =
      std::min<long long>(chunks, std::clamp<long long>(hw, 1, 8));
  if (workers <= 1) {
    for (long long c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (long long w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (long long c = w; c < chunks; c += workers) run_chunk(c);
      });
    for (auto& th : pool) th.join();
  }

  double sum = 0.0, sum_sq = 0.0;
  for (const auto& m : moments) {  // fixed chunk order
    sum += m.sum;
    sum_sq += m.sum_sq;
  }

  McEstimate out;
  out.samples = total;
  out.estimate = sum / static_cast<double>(total);
  if (total > 1) {
    const double var =
        std::max(0.0, (sum_sq - sum * out.estimate) / static_cast<double>(total - 1));
    out.std_error = std::sqrt(var / static_cast<double>(total));
  }
  return out;
}

Eigen::VectorXcd gaussian_unit(int n, std::mt19937_64& rng,
                               std::normal_distribution<double>& gauss) {
  Eigen::VectorXcd v(n);
  do {
    for (int i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  } while (v.squaredNorm() == 0.0);
  v.normalize();
  return v;
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(Eigen::MatrixXcd points, Eigen::VectorXd weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.cols() < 1 || points_.rows() < 1)
    throw InputError("DiscreteMeasure: needs at least one point");
  if (weights_.size() != points_.cols())
    throw InputError("DiscreteMeasure: weights must match the number of points");
  if (!frames::FrameSet::all_unit_norm(points_))
    throw ValidationError("DiscreteMeasure: points must be unit vectors");
  total_weight_ = 0.0;
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    const double w = weights_(i);
    if (!std::isfinite(w) || w < 0.0)
      throw InputError("DiscreteMeasure: weights must be finite and non-negative");
    total_weight_ += w;
  }
  if (total_weight_ <= 0.0)
    throw InputError("DiscreteMeasure: at least one weight must be positive");
}

DiscreteMeasure DiscreteMeasure::uniform(const frames::FrameSet& x) {
  return DiscreteMeasure(
      x.columns(), Eigen::VectorXd::Constant(x.count(), 1.0 / x.count()));
}

HaarSampler::HaarSampler(int n, std::uint64_t seed) : n_(n), rng_(seed) {
  if (n < 1) throw InputError("HaarSampler: dimension must be positive");
}

Eigen::VectorXcd HaarSampler::sample() {
  ++counter_;
  return gaussian_unit(n_, rng_, gauss_);
}

McEstimate mc_coherence_integral(int n, int k, long long pairs,
                                 std::uint64_t seed) {
  if (n < 1 || k < 1) throw InputError("mc_coherence_integral: n and k must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  return chunked_mc(pairs, seed, [n, k, gauss](std::mt19937_64& rng) mutable {
    const Eigen::VectorXcd x = gaussian_unit(n, rng, gauss);
    const Eigen::VectorXcd y = gaussian_unit(n, rng, gauss);
    return pow_ll(std::norm(x.dot(y)), k);
  });
}

double measure_potential(const DiscreteMeasure& mu, int k) {
  if (k < 1) throw InputError("measure_potential: order must be positive");
  const Eigen::MatrixXcd c = mu.points().adjoint() * mu.points();
  double sum = 0.0;
  for (int i = 0; i < mu.size(); ++i)
    for (int l = 0; l < mu.size(); ++l)
      sum += mu.weights()(i) * mu.weights()(l) * pow_ll(std::norm(c(i, l)), k);
  return sum / (mu.total_weight() * mu.total_weight());
}

linalg::HermitianMatrix generalized_metric(const DiscreteMeasure& mu, int k) {
  if (k < 0) throw InputError("generalized_metric: order must be non-negative");
  const Eigen::Index dim = symtensor::sym_dim(mu.dim(), k);
  Eigen::MatrixXcd metric = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < mu.size(); ++i) {
    const double w = mu.weights()(i);
    if (w == 0.0) continue;
    const Eigen::VectorXcd lifted = symtensor::lift(mu.points().col(i), k).coords;
    metric.noalias() += (w / mu.total_weight()) * (lifted * lifted.adjoint());
  }
  return linalg::HermitianMatrix(std::move(metric));
}

TDesignReport tdesign_check(const DiscreteMeasure& mu, int t, double tol,
                            std::uint64_t seed, long long mc_samples,
                            int directions) {
  if (t < 1) throw InputError("tdesign_check: t must be at least 1");
  if (tol <= 0.0) throw InputError("tdesign_check: tol must be positive");
  if (directions < 1) throw InputError("tdesign_check: needs at least one direction");

  const int n = mu.dim();
  TDesignReport report;
  report.t = t;
  report.n = n;
  report.pass = true;

  for (int k = 0; k <= t; ++k) {
    TDesignOrderCheck row;
    row.k = k;
    row.dim = symtensor::sym_dim(n, k);

    const auto metric = generalized_metric(mu, k);
    const Eigen::MatrixXcd target =
        Eigen::MatrixXcd::Identity(row.dim, row.dim) / static_cast<double>(row.dim);
    row.max_abs_dev = (metric.mat() - target).cwiseAbs().maxCoeff();
    row.exact_pass = row.max_abs_dev <= tol;

    if (k == 0) {
      // Constants integrate exactly against any normalized measure.
      row.mc_pass = true;
    } else {
      HaarSampler directions_rng(n, mix64(seed, 1000 + static_cast<std::uint64_t>(k)));
      row.mc_max_sigma = 0.0;
      row.mc_pass = true;
      for (int r = 0; r < directions; ++r) {
        const Eigen::VectorXcd y = directions_rng.sample();
        double design_avg = 0.0;
        for (int i = 0; i < mu.size(); ++i)
          design_avg += mu.weights()(i) * pow_ll(std::norm(mu.points().col(i).dot(y)), k);
        design_avg /= mu.total_weight();

        std::normal_distribution<double> gauss(0.0, 1.0);
        const McEstimate haar = chunked_mc(
            mc_samples, mix64(seed, 2000 + static_cast<std::uint64_t>(k * directions + r)),
            [n, k, &y, gauss](std::mt19937_64& rng) mutable {
              const Eigen::VectorXcd x = gaussian_unit(n, rng, gauss);
              return pow_ll(std::norm(x.dot(y)), k);
            });
        const double sigma =
            haar.std_error > 0.0
                ? std::abs(design_avg - haar.estimate) / haar.std_error
                : (design_avg == haar.estimate ? 0.0 : HUGE_VAL);
        row.mc_max_sigma = std::max(row.mc_max_sigma, sigma);
        if (sigma > 3.0) row.mc_pass = false;
      }
    }

    if (k >= 1 && !row.exact_pass) report.pass = false;
    report.per_k.push_back(row);
  }
  return report;
}

}  // namespace welch::generalized

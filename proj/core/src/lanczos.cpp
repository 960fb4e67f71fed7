#include "spinring/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "spinring/errors.hpp"

namespace spinring {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

Eigen::VectorXcd start_vector(Eigen::Index dim, std::uint64_t tag) {
  std::uint64_t state = 0x5d1f00d5ull ^ (tag * 0x2545f4914f6cdd1dull);
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    v[i] = {2.0 * unit_double(state) - 1.0, 2.0 * unit_double(state) - 1.0};
  return v;
}

void project_out(const std::vector<Eigen::VectorXcd>& basis,
                 Eigen::VectorXcd& v) {
  for (const auto& b : basis) v -= b.dot(v) * b;
}

struct RitzPair {
  double value;
  Eigen::VectorXd weights;  // tridiagonal eigenvector
};

RitzPair lowest_ritz(const std::vector<double>& alpha,
                     const std::vector<double>& beta) {
  const Eigen::Index m = static_cast<Eigen::Index>(alpha.size());
  Eigen::VectorXd diag(m), sub(std::max<Eigen::Index>(m - 1, 0));
  for (Eigen::Index i = 0; i < m; ++i) diag[i] = alpha[i];
  for (Eigen::Index i = 0; i + 1 < m; ++i) sub[i] = beta[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  return {solver.eigenvalues()[0], solver.eigenvectors().col(0)};
}

}  // namespace

LanczosResult lanczos_lowest(const MatVec& apply, Eigen::Index dim,
                             int n_eigs, const LanczosOptions& options) {
  if (dim <= 0) throw ShapeError("empty operator");
  n_eigs = static_cast<int>(std::min<Eigen::Index>(n_eigs, dim));
  LanczosResult result;
  if (n_eigs <= 0) return result;

  Eigen::VectorXcd work(dim), probe(dim);
  for (int target = 0; target < n_eigs; ++target) {
    double best_residual = std::numeric_limits<double>::infinity();
    bool accepted = false;
    // A few fresh starts guard against a seed that happens to be orthogonal
    // to the wanted eigenvector.
    for (std::uint64_t attempt = 0; attempt < 4 && !accepted; ++attempt) {
      Eigen::VectorXcd v =
          start_vector(dim, options.seed_tag + 0x1000ull * target + attempt);
      project_out(result.eigenvectors, v);
      if (v.norm() < 1e-8) continue;
      v.normalize();

      std::vector<Eigen::VectorXcd> krylov{std::move(v)};
      std::vector<double> alpha, beta;
      const std::size_t max_space =
          static_cast<std::size_t>(dim) - result.eigenvectors.size();
      for (int it = 0; it < options.max_iterations; ++it) {
        apply(krylov.back(), work);
        ++result.iterations;
        project_out(result.eigenvectors, work);
        const double a = krylov.back().dot(work).real();
        alpha.push_back(a);
        work -= a * krylov.back();
        if (krylov.size() > 1) work -= beta.back() * krylov[krylov.size() - 2];
        // Full reorthogonalization, two passes for fp safety.
        project_out(krylov, work);
        project_out(krylov, work);
        const double b = work.norm();

        const bool krylov_done = b < 1e-13 || alpha.size() == max_space;
        if (krylov_done || alpha.size() % 5 == 0 ||
            it + 1 == options.max_iterations) {
          const RitzPair ritz = lowest_ritz(alpha, beta);
          Eigen::VectorXcd x = Eigen::VectorXcd::Zero(dim);
          for (std::size_t i = 0; i < krylov.size(); ++i)
            x += ritz.weights[static_cast<Eigen::Index>(i)] * krylov[i];
          x.normalize();
          apply(x, probe);
          ++result.iterations;
          const double residual = (probe - ritz.value * x).norm();
          best_residual = std::min(best_residual, residual);
          if (residual <=
              options.residual_tol * std::max(1.0, std::abs(ritz.value))) {
            result.eigenvalues.push_back(ritz.value);
            result.eigenvectors.push_back(std::move(x));
            result.max_residual = std::max(result.max_residual, residual);
            accepted = true;
            break;
          }
        }
        if (krylov_done) break;
        beta.push_back(b);
        krylov.push_back(work / b);
      }
    }
    if (!accepted)
      throw SolverError("eigenpair failed to converge", best_residual);
  }
  // Deflated restarts produce ascending eigenvalues by construction; sort
  // defensively in case of near-degenerate rounding.
  std::vector<std::size_t> order(result.eigenvalues.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.eigenvalues[a] < result.eigenvalues[b];
  });
  LanczosResult sorted;
  sorted.iterations = result.iterations;
  sorted.max_residual = result.max_residual;
  for (std::size_t i : order) {
    sorted.eigenvalues.push_back(result.eigenvalues[i]);
    sorted.eigenvectors.push_back(std::move(result.eigenvectors[i]));
  }
  return sorted;
}

}  // namespace spinring

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace spinring {

using MatVec = std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>;

struct LanczosOptions {
  int max_iterations = 300;
  // Converged when ||Av - Ev|| <= residual_tol * max(1, |E|).
  double residual_tol = 1e-11;
  // Mixed into the deterministic start vector; pass a hash of the sector
  // coordinates so distinct blocks do not share Krylov seeds.
  std::uint64_t seed_tag = 0;
};

struct LanczosResult {
  std::vector<double> eigenvalues;              // ascending
  std::vector<Eigen::VectorXcd> eigenvectors;   // matching order, unit norm
  int iterations = 0;                           // total matvecs spent
  double max_residual = 0.0;
};

// Lowest n_eigs eigenpairs of a Hermitian operator given only its action.
// Full reorthogonalization against the Krylov block; repeated eigenvalues
// are recovered by deflated restarts (each subsequent pair is computed in
// the orthogonal complement of the converged ones). Deterministic: the
// start vectors come from a fixed splitmix64 stream, no external seeding.
// Throws SolverError (with the best residual) if an eigenpair fails to
// converge within max_iterations.
LanczosResult lanczos_lowest(const MatVec& apply, Eigen::Index dim,
                             int n_eigs, const LanczosOptions& options = {});

}  // namespace spinring

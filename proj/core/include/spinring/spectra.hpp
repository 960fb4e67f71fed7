#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <vector>

#include "spinring/hamiltonian.hpp"
#include "spinring/lanczos.hpp"
#include "spinring/state.hpp"

namespace spinring {

struct EigenLevel {
  double energy = 0.0;
  SymmetrySector sector;
  StateVector vector;
  int degeneracy_group = 0;
};

struct SpectrumResult {
  std::vector<EigenLevel> levels;  // ascending energy
  int n_requested = 0;

  const EigenLevel& ground() const { return levels.front(); }
  // Lowest level strictly above the ground degeneracy group.
  const EigenLevel* first_excited() const;
};

// Levels closer than this are treated as one degeneracy group.
inline double degeneracy_tolerance(double energy) {
  return 1e-8 * std::max(1.0, std::abs(energy));
}

// Eigensolver for one momentum block. Holds the basis and the sparse
// unit-coupling components, so repeated solves at different couplings only
// pay for the eigen iteration. Blocks up to dimension 512 are diagonalized
// densely; larger ones go through Lanczos on the assembled sparse matrix.
class SectorSolver {
 public:
  SectorSolver(int n_sites, const SymmetrySector& sector,
               std::shared_ptr<const SzBasis> parent = nullptr);

  const MomentumBasis& basis() const { return *basis_; }
  const std::shared_ptr<const MomentumBasis>& basis_ptr() const {
    return basis_;
  }
  std::size_t dim() const { return basis_->dim(); }

  struct Pair {
    double energy;
    Eigen::VectorXcd vector;
    double residual;
  };
  // Lowest min(m, dim) eigenpairs, ascending. Residuals satisfy
  // ||Hv - Ev|| <= 1e-10 * max(1, |E|).
  std::vector<Pair> lowest(const CouplingParams& params, int m) const;
  double ground_energy(const CouplingParams& params) const;

 private:
  Eigen::SparseMatrix<std::complex<double>> assemble(
      const CouplingParams& params) const;

  std::shared_ptr<const MomentumBasis> basis_;
  SectorComponents components_;
};

// Per-size cache of sector solvers; scans and bisections reuse the basis
// and component matrices across coupling values.
class RingSolver {
 public:
  explicit RingSolver(int n_sites);

  int n_sites() const { return n_sites_; }
  const SectorSolver& sector(const SymmetrySector& sector);

  // The m lowest eigenpairs over all (Sz >= 0, momentum) sectors. Sz < 0
  // sectors are mirror images and are not enumerated. Requires j1 == j2.
  // Sector solves run on n_threads workers (0 = auto); callers that already
  // parallelize over coupling values pass 1.
  SpectrumResult lowest_levels(const CouplingParams& params, int m,
                               int n_threads = 0);

  double sector_ground_energy(const CouplingParams& params,
                              const SymmetrySector& sector);

  // Instantiates every (Sz >= 0, momentum) sector solver. After this,
  // concurrent lowest_levels/sector_ground_energy calls are read-only.
  void prebuild();

 private:
  int n_sites_;
  std::map<int, std::shared_ptr<const SzBasis>> sz_bases_;
  std::map<std::pair<int, int>, std::unique_ptr<SectorSolver>> solvers_;
};

SpectrumResult lowest_levels(const CouplingParams& params, int m,
                             int n_threads = 0);

struct MomentumMeasurement {
  int momentum_index = 0;  // n in k = 2*pi*n/N
  double fidelity = 0.0;   // |<psi|T|psi>|
  bool is_eigenstate = false;
};

// c = <psi|T|psi>; fidelity |c| certifies a momentum eigenstate when ~1.
// Returns is_eigenstate = false (rather than throwing) below 0.999, so
// combined non-eigenstates can still be inspected.
MomentumMeasurement measure_momentum(const StateVector& state);

// <S^2> of the (unit-normalized) state; spin s solves s(s+1) = <S^2>.
double total_spin(const StateVector& state);

}  // namespace spinring

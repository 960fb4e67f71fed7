#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "spinring/basis.hpp"
#include "spinring/state.hpp"

namespace spinring {

// H = j0 sum_i S_i.S_{i+1} + j1 sum_{i even} S_i.S_{i+2}
//       + j2 sum_{i odd} S_i.S_{i+2},  periodic, 0-based sites.
// j1 = j2 = J recovers the uniform next-nearest-neighbour ring.
struct CouplingParams {
  double j0 = 1.0;
  double j1 = 0.0;
  double j2 = 0.0;
  int n_sites = 0;

  static CouplingParams uniform(int n_sites, double j0, double j) {
    return {j0, j, j, n_sites};
  }
  bool uniform_nnn() const { return j1 == j2; }
  CouplingParams with_j(double j) const { return {j0, j, j, n_sites}; }
};

// The three fixed-coupling pieces of H applied separately; callers combine
// them as j0*nn + j1*nnn_even + j2*nnn_odd. Keeping the pieces apart makes
// linearity in the couplings exact and lets parameter scans reuse them.
// Full/Sz states only: the even/odd pieces are not translation covariant,
// so they have no action within a single momentum block.
struct HamiltonianParts {
  Eigen::VectorXcd nn;
  Eigen::VectorXcd nnn_even;
  Eigen::VectorXcd nnn_odd;
};

HamiltonianParts apply_hamiltonian_parts(const StateVector& state);

StateVector apply_hamiltonian(const CouplingParams& params,
                              const StateVector& state);

// S_i.S_j applied to a full/Sz state (momentum states are expanded first by
// the caller; the product is not translation covariant for a single pair).
StateVector apply_spin_dot(const StateVector& state, int i, int j);

// One-site translation T: amplitudes move from |c> to |Tc>.
StateVector apply_translation(const StateVector& state);

inline constexpr std::size_t kDenseCap = 4096;

// Dense momentum-block matrix, oracle path for blocks up to `cap`.
Eigen::MatrixXcd hamiltonian_matrix(const CouplingParams& params,
                                    const SymmetrySector& sector,
                                    std::size_t cap = kDenseCap);

// Dense Sz-block and full-space matrices (real in the configuration basis).
Eigen::MatrixXd sz_block_matrix(const CouplingParams& params, int sz_twice,
                                std::size_t cap = kDenseCap);
Eigen::MatrixXd full_matrix(const CouplingParams& params,
                            std::size_t cap = kDenseCap);

// Sparse unit-coupling components of one momentum block; column a holds
// <b(k)|H_part|a(k)> = sum_bonds h e^{-ikl} sqrt(R_a/R_b). Only the NN sum
// and the full NNN sum commute with T, so those are the two blocks; the
// even/odd NNN split exists only in the full/Sz bases.
struct SectorComponents {
  Eigen::SparseMatrix<std::complex<double>> nn;
  Eigen::SparseMatrix<std::complex<double>> nnn;
};
SectorComponents sector_components(const MomentumBasis& basis);

}  // namespace spinring

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "spinring/hamiltonian.hpp"
#include "spinring/state.hpp"

namespace spinring {

// Two-site reduced density matrix in the basis {uu, ud, du, dd}, assuming
// the symmetric form
//   [ v  0  0  0 ]
//   [ 0  w  z  0 ]
//   [ 0  z* w  0 ]
//   [ 0  0  0  v ]
// valid for total-Sz-zero, spin-flip-symmetric states. 2v + 2w = 1.
struct TwoSiteRDM {
  double v = 0.0;
  double w = 0.0;
  std::complex<double> z;
  int site_i = 0;
  int site_j = 0;
};

// Raw 4x4 partial trace over all sites but (i, j); no structural assumption.
Eigen::Matrix4cd rdm_matrix(const StateVector& state, int i, int j);

// Partial trace with the structure check (off-pattern entries and the
// v/w pair mismatches must stay below 1e-10, else StructureError carrying
// the offending matrix).
TwoSiteRDM reduced_density_matrix(const StateVector& state, int i, int j);

// <sigma_i . sigma_j> = 4 <S_i . S_j>, evaluated directly on the state.
double isotropic_correlator(const StateVector& state, int i, int j);

struct BondSums {
  double h0 = 0.0;  // sum_i <S_i.S_{i+1}>, all N ring bonds
  double h = 0.0;   // sum_i <S_i.S_{i+2}>, all N ring bonds
};
BondSums bond_sums(const StateVector& state);

// <sigma_0.sigma_alpha>-style profile averaged around the ring, plus the
// bond sums; feeds the correlators CLI output.
struct CorrelatorReport {
  std::vector<double> g_dot;  // index alpha-1, alpha = 1..N/2
  double h0 = 0.0;
  double h = 0.0;
};
CorrelatorReport correlator_report(const StateVector& state);

// Central finite differences of the ground energy against the
// Hellmann-Feynman values from the ground-state bond sums. Requires a
// unique ground state at params (AmbiguityError otherwise) and j1 == j2.
struct DerivativeCheck {
  double de_dj0 = 0.0;  // finite difference in j0
  double h0 = 0.0;
  double de_dj = 0.0;   // finite difference in j
  double h = 0.0;
};
DerivativeCheck energy_derivative_check(const CouplingParams& params,
                                        double delta);

}  // namespace spinring

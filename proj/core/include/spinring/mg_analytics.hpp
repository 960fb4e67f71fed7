#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "spinring/hamiltonian.hpp"
#include "spinring/state.hpp"

namespace spinring {

// Perfect matching of the ring into singlet pairs [ij] with the sign
// convention [ij] = (|up_i down_j> - |down_i up_j>)/sqrt(2); the first
// listed site of each pair carries the up spin in the positive term.
struct DimerCovering {
  std::vector<std::pair<int, int>> pairs;

  // [01][23]..[N-2,N-1]
  static DimerCovering even_bonds(int n_sites);
  // [12][34]..[N-1,0] with the wrap pair listed as (N-1, 0)
  static DimerCovering odd_bonds(int n_sites);
};

// Product of singlets as a full-space state; throws InvalidCoveringError
// unless the pairs form a perfect matching.
StateVector build_dimer_state(const DimerCovering& covering, int n_sites);

struct MGConstants {
  double xi = 0.0;   // (1/2)^(N/2-2)
  double chi = 0.0;  // (4 - xi^2)^(-1/2)
};
MGConstants mg_constants(int n_sites);

// The two dimer combinations (phi1 -+ phi2), normalized:
//   first  = (phi1 - phi2)/sqrt(Omega1)
//   second = (phi1 + phi2)/sqrt(Omega2)
// Both are exact ground states of H(j0, j0/2) with energy -3N j0/8; their
// momenta form the set {0, pi} but which combination carries which label
// depends on N, so callers must measure rather than assume.
std::pair<StateVector, StateVector> mg_ground_states(int n_sites);

struct ReconstructionAngles {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2*pi]
};

// Psi1 = cos(theta/2) psi1 + e^{i phi} sin(theta/2) psi2
// Psi2 = e^{-i phi} sin(theta/2) psi1 - cos(theta/2) psi2
std::pair<StateVector, StateVector> reconstructed_states(
    const StateVector& psi1, const StateVector& psi2,
    const ReconstructionAngles& angles);

// Exact six-site solution. For J >= J0/2 the ground state is the momentum-0
// dimer combination (phi1 + phi2), energy e1 at every J on that side. For
// J <= J0/2 it is the momentum-pi combination mixed with the zero-energy
// state: proportional to (phi1 - phi2) + eta psi_e, squared norm omega3/8,
// energy e2. c1_per_pair is the analytic NN pair concurrence of the ground
// state on either side.
struct N6ExactSolution {
  enum class Branch { BelowHalf, AboveHalf };
  double eta = 0.0;
  double omega3 = 0.0;     // 8 eta^2 - 8 eta + 20
  double e1 = 0.0;         // -3 (j0 + j) / 2
  double e2 = 0.0;         // (eta - 5/2) j0 + (1/2 - eta) j
  double e_ground = 0.0;   // min(e1, e2)
  double c1_per_pair = 0.0;
  Branch branch = Branch::BelowHalf;
};
N6ExactSolution n6_exact(const CouplingParams& params);

// Equal-weight alternating combination of |uuuddd> translates minus the
// (1 - T) Neel pair; zero-energy momentum-pi eigenstate of H(j0, j0).
StateVector build_psi_e(int n_sites);

// |C1 - C2| for the NN pair concurrence of the reconstructed pair at the
// dimer point, evaluated from the xi/chi closed form; per-pair normalized.
// Valid for N >= 8 (UnsupportedError below); at N = 6 the gate argument
// 3Q - 1 sits exactly at zero and the form degenerates.
double nn_difference_closed_form(int n_sites,
                                 const ReconstructionAngles& angles);

// Numeric |C1^[alpha] - C2^[alpha]| and |C_T1 - C_T2| on a (theta, phi)
// grid, theta in [0, pi], phi in [0, 2*pi], endpoints inclusive. Values are
// per-pair normalized (ring sum / N). Both inputs must be degenerate
// eigenstates of H(params) (NotDegenerateError / ShapeError otherwise).
struct SurfaceResult {
  std::vector<double> thetas;
  std::vector<double> phis;
  std::vector<Eigen::MatrixXd> per_alpha;  // [alpha-1](i_theta, i_phi)
  Eigen::MatrixXd total;
};
SurfaceResult difference_surface(const CouplingParams& params,
                                 const StateVector& psi1,
                                 const StateVector& psi2, int n_theta,
                                 int n_phi, int n_threads = 0);

}  // namespace spinring

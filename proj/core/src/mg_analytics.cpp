#include "spinring/mg_analytics.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

#include "spinring/errors.hpp"
#include "spinring/observables.hpp"
#include "spinring/spectra.hpp"
#include "spinring/util.hpp"

namespace spinring {

namespace {

using cd = std::complex<double>;

// Both states as amplitude vectors over one shared basis handle, so they
// can be combined coefficient-wise.
std::pair<StateVector, StateVector> align(const StateVector& x,
                                          const StateVector& y) {
  if (x.n_sites() != y.n_sites())
    throw ShapeError("states live on different rings");
  StateVector a = x.kind() == StateVector::Kind::Momentum ? x.to_sz_sector() : x;
  StateVector b = y.kind() == StateVector::Kind::Momentum ? y.to_sz_sector() : y;
  if (a.kind() == StateVector::Kind::Sz && b.kind() == StateVector::Kind::Sz &&
      a.sz_basis()->sz_twice() == b.sz_basis()->sz_twice())
    return {a, StateVector(a.sz_basis(), b.amplitudes())};
  return {a.to_full(), b.to_full()};
}

void check_orthonormal(const StateVector& a, const StateVector& b) {
  constexpr double tol = 1e-10;
  if (std::abs(a.norm() - 1.0) > tol || std::abs(b.norm() - 1.0) > tol)
    throw ShapeError("states must be unit-normalized");
  if (std::abs(inner_product(a, b)) > tol)
    throw ShapeError("states must be orthogonal");
}

StateVector combine(const StateVector& a, const StateVector& b, cd ca, cd cb) {
  Eigen::VectorXcd amps = ca * a.amplitudes() + cb * b.amplitudes();
  if (a.kind() == StateVector::Kind::Sz)
    return StateVector(a.sz_basis(), std::move(amps));
  return StateVector::full(a.n_sites(), std::move(amps));
}

int pair_slot(config_t c, config_t mask_i, config_t mask_j) {
  return ((c & mask_i) ? 0 : 2) + ((c & mask_j) ? 0 : 1);
}

// Tr_rest |a><b| over the two sites (i, j); inputs over a shared basis.
Eigen::Matrix4cd cross_rdm(const StateVector& a, const StateVector& b, int i,
                           int j) {
  const config_t mask_i = config_t{1} << i;
  const config_t mask_j = config_t{1} << j;
  const config_t pair_mask = mask_i | mask_j;
  const SzBasis* basis =
      a.kind() == StateVector::Kind::Sz ? a.sz_basis().get() : nullptr;
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (Eigen::Index idx = 0; idx < a.dim(); ++idx) {
    const cd amp = a.amplitudes()[idx];
    if (amp == cd{}) continue;
    const config_t c = basis ? basis->config_at(static_cast<std::size_t>(idx))
                             : static_cast<config_t>(idx);
    const int row = pair_slot(c, mask_i, mask_j);
    const config_t rest = c & ~pair_mask;
    for (int col = 0; col < 4; ++col) {
      const config_t partner =
          rest | ((col & 2) ? 0 : mask_i) | ((col & 1) ? 0 : mask_j);
      cd other;
      if (basis) {
        const auto pidx = basis->index_of(partner);
        if (!pidx) continue;
        other = b.amplitudes()[static_cast<Eigen::Index>(*pidx)];
      } else {
        other = b.amplitudes()[partner];
      }
      rho(row, col) += amp * std::conj(other);
    }
  }
  return rho;
}

double concurrence_of_matrix(const Eigen::Matrix4cd& rho) {
  const double v = 0.5 * (rho(0, 0).real() + rho(3, 3).real());
  const cd z = 0.5 * (rho(1, 2) + std::conj(rho(2, 1)));
  return std::max(0.0, 2.0 * (std::abs(z) - v));
}

}  // namespace

DimerCovering DimerCovering::even_bonds(int n_sites) {
  DimerCovering covering;
  for (int i = 0; i + 1 < n_sites; i += 2) covering.pairs.emplace_back(i, i + 1);
  return covering;
}

DimerCovering DimerCovering::odd_bonds(int n_sites) {
  DimerCovering covering;
  for (int i = 1; i + 1 < n_sites; i += 2) covering.pairs.emplace_back(i, i + 1);
  covering.pairs.emplace_back(n_sites - 1, 0);
  return covering;
}

StateVector build_dimer_state(const DimerCovering& covering, int n_sites) {
  if (n_sites < 2 || n_sites % 2 != 0)
    throw InvalidCoveringError("ring size must be even");
  config_t seen = 0;
  for (const auto& [i, j] : covering.pairs) {
    if (i < 0 || j < 0 || i >= n_sites || j >= n_sites || i == j)
      throw InvalidCoveringError("pair site out of range");
    const config_t m = (config_t{1} << i) | (config_t{1} << j);
    if (seen & m) throw InvalidCoveringError("site covered twice");
    seen |= m;
  }
  if (std::popcount(seen) != n_sites)
    throw InvalidCoveringError("covering does not reach every site");

  // [ij] = (|up_i down_j> - |down_i up_j>)/sqrt(2), expanded pair by pair.
  const double root_half = std::sqrt(0.5);
  std::vector<std::pair<config_t, double>> terms = {{0, 1.0}};
  for (const auto& [i, j] : covering.pairs) {
    std::vector<std::pair<config_t, double>> next;
    next.reserve(2 * terms.size());
    for (const auto& [bits, coeff] : terms) {
      next.emplace_back(bits | (config_t{1} << i), coeff * root_half);
      next.emplace_back(bits | (config_t{1} << j), -coeff * root_half);
    }
    terms = std::move(next);
  }
  StateVector state = StateVector::zero_full(n_sites);
  for (const auto& [bits, coeff] : terms) state.amplitudes()[bits] += coeff;
  state.normalize();
  return state;
}

MGConstants mg_constants(int n_sites) {
  if (n_sites < 4 || n_sites % 2 != 0)
    throw UnsupportedError("dimer constants need an even ring of 4+ sites");
  MGConstants c;
  c.xi = std::pow(0.5, n_sites / 2 - 2);
  c.chi = 1.0 / std::sqrt(4.0 - c.xi * c.xi);
  return c;
}

std::pair<StateVector, StateVector> mg_ground_states(int n_sites) {
  if (n_sites < 6 || n_sites % 2 != 0)
    throw UnsupportedError("dimer ground pair needs an even ring of 6+ sites");
  const StateVector phi1 = build_dimer_state(
      DimerCovering::even_bonds(n_sites), n_sites);
  const StateVector phi2 = build_dimer_state(
      DimerCovering::odd_bonds(n_sites), n_sites);
  const double overlap = inner_product(phi1, phi2).real();
  const double omega1 = 2.0 - 2.0 * overlap;
  const double omega2 = 2.0 + 2.0 * overlap;
  StateVector psi1 =
      combine(phi1, phi2, 1.0 / std::sqrt(omega1), -1.0 / std::sqrt(omega1));
  StateVector psi2 =
      combine(phi1, phi2, 1.0 / std::sqrt(omega2), 1.0 / std::sqrt(omega2));
  return {std::move(psi1), std::move(psi2)};
}

std::pair<StateVector, StateVector> reconstructed_states(
    const StateVector& psi1, const StateVector& psi2,
    const ReconstructionAngles& angles) {
  const auto [a, b] = align(psi1, psi2);
  check_orthonormal(a, b);
  const double half = 0.5 * angles.theta;
  const cd u = std::cos(half);
  const cd v = std::polar(std::sin(half), angles.phi);
  StateVector big1 = combine(a, b, u, v);
  StateVector big2 = combine(a, b, std::conj(v), -u);
  return {std::move(big1), std::move(big2)};
}

N6ExactSolution n6_exact(const CouplingParams& params) {
  if (params.n_sites != 6)
    throw UnsupportedError("closed-form solution exists for six sites only");
  if (!params.uniform_nnn())
    throw UnsupportedError("closed-form solution assumes j1 == j2");
  if (params.j0 <= 0.0)
    throw UnsupportedError("closed-form solution assumes antiferromagnetic j0");
  const double j0 = params.j0;
  const double j = params.j1;

  N6ExactSolution sol;
  if (std::abs(j - j0) <= 1e-9 * j0) {
    // The quotient has a removable singularity at j == j0; its limit is 1/2.
    sol.eta = 0.5;
  } else {
    const double disc = std::sqrt(9.0 * j * j - 18.0 * j * j0 + 13.0 * j0 * j0);
    sol.eta = (j - 3.0 * j0 + disc) / (2.0 * (j - j0));
  }
  sol.omega3 = 8.0 * sol.eta * sol.eta - 8.0 * sol.eta + 20.0;
  sol.e1 = -1.5 * (j0 + j);
  sol.e2 = (sol.eta - 2.5) * j0 + (0.5 - sol.eta) * j;
  sol.branch = j < 0.5 * j0 ? N6ExactSolution::Branch::BelowHalf
                            : N6ExactSolution::Branch::AboveHalf;
  sol.e_ground = std::min(sol.e1, sol.e2);
  sol.c1_per_pair =
      sol.branch == N6ExactSolution::Branch::BelowHalf
          ? -4.0 * (sol.eta * sol.eta + 2.0 * sol.eta - 2.0) / sol.omega3
          : 0.0;
  return sol;
}

StateVector build_psi_e(int n_sites) {
  if (n_sites != 6)
    throw UnsupportedError("the zero-energy excited state is a six-site form");
  StateVector state = StateVector::zero_full(6);
  const double weight = 1.0 / (2.0 * std::sqrt(2.0));
  const config_t domain_wall = 0b000111;  // sites 0,1,2 up
  for (int r = 0; r < 6; ++r) {
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    state.amplitudes()[translate_bits(domain_wall, 6, r)] += sign * weight;
  }
  const config_t neel = 0b010101;  // sites 0,2,4 up
  state.amplitudes()[neel] -= weight;
  state.amplitudes()[translate_bits(neel, 6, 1)] += weight;
  return state;
}

double nn_difference_closed_form(int n_sites,
                                 const ReconstructionAngles& angles) {
  if (n_sites < 8 || n_sites % 2 != 0)
    throw UnsupportedError(
        "closed form holds for even rings of 8+ sites; at 6 the gate "
        "argument degenerates to zero");
  const MGConstants c = mg_constants(n_sites);
  const double chi2 = c.chi * c.chi;
  const double cos_t = std::cos(angles.theta);
  const double mix = c.chi * std::cos(angles.phi) * std::sin(angles.theta);
  const auto q = [&](int i, int j) {
    const double si = (i % 2 == 0) ? 1.0 : -1.0;
    const double sij = ((i + j) % 2 == 0) ? 1.0 : -1.0;
    return 1.0 - 2.0 * chi2 + si * c.xi * chi2 * cos_t + sij * mix;
  };
  const auto eps = [&](int i, int j) {
    const double x = 3.0 * q(i, j) - 1.0;
    return x > 0.0 ? 0.25 * x : 0.0;  // step function open only for x > 0
  };
  return std::abs(eps(1, 1) + eps(1, 2) - eps(2, 1) - eps(2, 2));
}

SurfaceResult difference_surface(const CouplingParams& params,
                                 const StateVector& psi1,
                                 const StateVector& psi2, int n_theta,
                                 int n_phi, int n_threads) {
  if (n_theta < 2 || n_phi < 2) throw ShapeError("grid needs 2+ points per axis");
  if (params.n_sites != psi1.n_sites())
    throw ShapeError("coupling parameters and states disagree on n_sites");
  const auto [a, b] = align(psi1, psi2);
  check_orthonormal(a, b);

  const auto eigen_residual = [&params](const StateVector& s, double& energy) {
    const StateVector hs = apply_hamiltonian(params, s);
    energy = inner_product(s, hs).real();
    return (hs.amplitudes() - energy * s.amplitudes()).norm();
  };
  double e1 = 0.0, e2 = 0.0;
  const double r1 = eigen_residual(a, e1);
  const double r2 = eigen_residual(b, e2);
  const double tol = degeneracy_tolerance(std::min(e1, e2));
  if (r1 > tol || r2 > tol)
    throw NotDegenerateError("inputs are not eigenstates of the Hamiltonian");
  if (std::abs(e1 - e2) > tol)
    throw NotDegenerateError("input energies differ beyond tolerance");

  const int n = params.n_sites;
  const int n_alpha = n / 2;

  // Cross density matrices per pair; the grid then only mixes 4x4 blocks.
  struct PairBlocks {
    Eigen::Matrix4cd r11, r22, r12;
  };
  std::vector<PairBlocks> blocks(static_cast<std::size_t>(n_alpha) * n);
  parallel_for(
      blocks.size(),
      [&](std::size_t idx) {
        const int alpha = static_cast<int>(idx) / n + 1;
        const int i = static_cast<int>(idx) % n;
        const int j = (i + alpha) % n;
        blocks[idx] = {cross_rdm(a, a, i, j), cross_rdm(b, b, i, j),
                       cross_rdm(a, b, i, j)};
      },
      n_threads);

  SurfaceResult result;
  result.thetas.resize(n_theta);
  result.phis.resize(n_phi);
  for (int t = 0; t < n_theta; ++t)
    result.thetas[t] = std::numbers::pi * t / (n_theta - 1);
  for (int p = 0; p < n_phi; ++p)
    result.phis[p] = 2.0 * std::numbers::pi * p / (n_phi - 1);
  result.per_alpha.assign(n_alpha, Eigen::MatrixXd::Zero(n_theta, n_phi));
  result.total = Eigen::MatrixXd::Zero(n_theta, n_phi);

  parallel_for(
      static_cast<std::size_t>(n_theta),
      [&](std::size_t t) {
        const double half = 0.5 * result.thetas[t];
        const double u = std::cos(half);
        for (int p = 0; p < n_phi; ++p) {
          const cd v = std::polar(std::sin(half), result.phis[p]);
          double total1 = 0.0, total2 = 0.0;
          for (int alpha = 1; alpha <= n_alpha; ++alpha) {
            double sum1 = 0.0, sum2 = 0.0;
            for (int i = 0; i < n; ++i) {
              const PairBlocks& pb =
                  blocks[static_cast<std::size_t>(alpha - 1) * n + i];
              const Eigen::Matrix4cd mixed =
                  u * (std::conj(v) * pb.r12 + v * pb.r12.adjoint());
              const Eigen::Matrix4cd rho1 =
                  u * u * pb.r11 + std::norm(v) * pb.r22 + mixed;
              const Eigen::Matrix4cd rho2 =
                  std::norm(v) * pb.r11 + u * u * pb.r22 - mixed;
              sum1 += concurrence_of_matrix(rho1);
              sum2 += concurrence_of_matrix(rho2);
            }
            const double mean1 = sum1 / n;
            const double mean2 = sum2 / n;
            result.per_alpha[alpha - 1](static_cast<Eigen::Index>(t), p) =
                std::abs(mean1 - mean2);
            total1 += mean1;
            total2 += mean2;
          }
          result.total(static_cast<Eigen::Index>(t), p) =
              std::abs(total1 - total2);
        }
      },
      n_threads);
  return result;
}

}  // namespace spinring

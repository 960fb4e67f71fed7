#include "spinring/observables.hpp"

#include <cmath>

#include "spinring/errors.hpp"
#include "spinring/spectra.hpp"

namespace spinring {

namespace {

StateVector expanded(const StateVector& state) {
  return state.kind() == StateVector::Kind::Momentum ? state.to_sz_sector()
                                                     : state;
}

void check_sites(const StateVector& state, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= state.n_sites() || j >= state.n_sites())
    throw ShapeError("site pair out of range or equal");
}

// Index in {uu, ud, du, dd} of the pair pattern of `c` at (mask_i, mask_j).
int pair_index(config_t c, config_t mask_i, config_t mask_j) {
  return ((c & mask_i) ? 0 : 2) + ((c & mask_j) ? 0 : 1);
}

}  // namespace

Eigen::Matrix4cd rdm_matrix(const StateVector& state, int i, int j) {
  const StateVector s = expanded(state);
  check_sites(s, i, j);
  const config_t mask_i = config_t{1} << i;
  const config_t mask_j = config_t{1} << j;
  const config_t pair_mask = mask_i | mask_j;
  const double norm2 = s.amplitudes().squaredNorm();
  if (norm2 == 0.0) throw ShapeError("cannot trace the zero vector");

  const SzBasis* basis =
      s.kind() == StateVector::Kind::Sz ? s.sz_basis().get() : nullptr;
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (Eigen::Index idx = 0; idx < s.dim(); ++idx) {
    const std::complex<double> amp = s.amplitudes()[idx];
    if (amp == std::complex<double>{}) continue;
    const config_t c = basis ? basis->config_at(static_cast<std::size_t>(idx))
                             : static_cast<config_t>(idx);
    const int row = pair_index(c, mask_i, mask_j);
    const config_t rest = c & ~pair_mask;
    for (int col = 0; col < 4; ++col) {
      const config_t partner = rest | ((col & 2) ? 0 : mask_i) |
                               ((col & 1) ? 0 : mask_j);
      std::complex<double> other;
      if (basis) {
        const auto pidx = basis->index_of(partner);
        if (!pidx) continue;
        other = s.amplitudes()[static_cast<Eigen::Index>(*pidx)];
      } else {
        other = s.amplitudes()[partner];
      }
      rho(row, col) += amp * std::conj(other);
    }
  }
  return rho / norm2;
}

TwoSiteRDM reduced_density_matrix(const StateVector& state, int i, int j) {
  const Eigen::Matrix4cd rho = rdm_matrix(state, i, j);
  constexpr double tol = 1e-10;
  const auto off_pattern = [&rho]() {
    double worst = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const bool allowed = (r == c) || (r == 1 && c == 2) ||
                             (r == 2 && c == 1);
        if (!allowed) worst = std::max(worst, std::abs(rho(r, c)));
      }
    return worst;
  };
  const double diag_imag =
      std::max({std::abs(rho(0, 0).imag()), std::abs(rho(1, 1).imag()),
                std::abs(rho(2, 2).imag()), std::abs(rho(3, 3).imag())});
  const double v_gap = std::abs(rho(0, 0) - rho(3, 3));
  const double w_gap = std::abs(rho(1, 1) - rho(2, 2));
  if (off_pattern() > tol || diag_imag > tol || v_gap > tol || w_gap > tol)
    throw StructureError(
        "two-site density matrix does not have the symmetric ring form", rho);

  TwoSiteRDM rdm;
  rdm.v = 0.5 * (rho(0, 0).real() + rho(3, 3).real());
  rdm.w = 0.5 * (rho(1, 1).real() + rho(2, 2).real());
  rdm.z = 0.5 * (rho(1, 2) + std::conj(rho(2, 1)));
  rdm.site_i = i;
  rdm.site_j = j;
  return rdm;
}

double isotropic_correlator(const StateVector& state, int i, int j) {
  const StateVector s = expanded(state);
  check_sites(s, i, j);
  const double norm2 = s.amplitudes().squaredNorm();
  if (norm2 == 0.0) throw ShapeError("cannot measure the zero vector");
  const StateVector dotted = apply_spin_dot(s, i, j);
  return 4.0 * s.amplitudes().dot(dotted.amplitudes()).real() / norm2;
}

BondSums bond_sums(const StateVector& state) {
  const StateVector s = expanded(state);
  const double norm2 = s.amplitudes().squaredNorm();
  if (norm2 == 0.0) throw ShapeError("cannot measure the zero vector");
  const HamiltonianParts parts = apply_hamiltonian_parts(s);
  BondSums sums;
  sums.h0 = s.amplitudes().dot(parts.nn).real() / norm2;
  sums.h =
      s.amplitudes().dot(parts.nnn_even + parts.nnn_odd).real() / norm2;
  return sums;
}

CorrelatorReport correlator_report(const StateVector& state) {
  const StateVector s = expanded(state);
  const int n = s.n_sites();
  CorrelatorReport report;
  report.g_dot.resize(n / 2);
  for (int alpha = 1; alpha <= n / 2; ++alpha) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      acc += isotropic_correlator(s, i, (i + alpha) % n);
    report.g_dot[alpha - 1] = acc / n;
  }
  const BondSums sums = bond_sums(s);
  report.h0 = sums.h0;
  report.h = sums.h;
  return report;
}

DerivativeCheck energy_derivative_check(const CouplingParams& params,
                                        double delta) {
  if (!params.uniform_nnn())
    throw UnsupportedError("derivative check is defined for j1 == j2");
  if (delta <= 0.0) throw ShapeError("step must be positive");

  RingSolver solver(params.n_sites);
  const SpectrumResult base = solver.lowest_levels(params, 2);
  if (base.levels.size() > 1 &&
      base.levels[1].degeneracy_group == base.levels[0].degeneracy_group)
    throw AmbiguityError("degenerate ground state at the evaluation point");

  const auto ground_energy = [&solver](const CouplingParams& p) {
    return solver.lowest_levels(p, 1).levels.front().energy;
  };

  DerivativeCheck check;
  CouplingParams p = params;
  p.j0 = params.j0 + delta;
  const double e_j0_plus = ground_energy(p);
  p.j0 = params.j0 - delta;
  const double e_j0_minus = ground_energy(p);
  check.de_dj0 = (e_j0_plus - e_j0_minus) / (2.0 * delta);

  const double e_j_plus = ground_energy(params.with_j(params.j1 + delta));
  const double e_j_minus = ground_energy(params.with_j(params.j1 - delta));
  check.de_dj = (e_j_plus - e_j_minus) / (2.0 * delta);

  const BondSums sums = bond_sums(base.levels.front().vector);
  check.h0 = sums.h0;
  check.h = sums.h;
  return check;
}

}  // namespace spinring

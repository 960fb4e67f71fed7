#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "oracle.hpp"
#include "spinring/errors.hpp"
#include "spinring/observables.hpp"
#include "spinring/spectra.hpp"

using namespace spinring;

namespace {

StateVector ground_state(int n, double j) {
  RingSolver rings(n);
  auto result = rings.lowest_levels(CouplingParams::uniform(n, 1.0, j), 2);
  return result.levels[0].vector;
}

}  // namespace

TEST_CASE("rdm_matrix matches the oracle partial trace") {
  const int n = 6;
  const Eigen::VectorXcd psi = oracle::random_state(n, 3);
  const StateVector state = StateVector::full(n, psi);
  for (auto [i, j] : std::vector<std::pair<int, int>>{
           {0, 1}, {0, 2}, {1, 4}, {5, 2}}) {
    const Eigen::Matrix4cd mine = rdm_matrix(state, i, j);
    const Eigen::Matrix4cd ref = oracle::rdm(psi, n, i, j);
    CHECK((mine - ref).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("rdm_matrix is a density matrix on any state") {
  const int n = 8;
  const StateVector state = StateVector::full(n, oracle::random_state(n, 9));
  const Eigen::Matrix4cd rho = rdm_matrix(state, 2, 6);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
  CHECK(std::abs(rho.trace().imag()) < 1e-14);
  CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho);
  CHECK(solver.eigenvalues().minCoeff() > -1e-12);
}

TEST_CASE("rdm_matrix accepts momentum states through the sector expansion") {
  const int n = 8;
  const SectorSolver solver(n, {0, 4});
  const auto pairs =
      solver.lowest(CouplingParams::uniform(n, 1.0, 0.6), 1);
  const StateVector state(solver.basis_ptr(), pairs[0].vector);
  const StateVector full = state.to_full();
  for (int alpha : {1, 2}) {
    const Eigen::Matrix4cd a = rdm_matrix(state, 0, alpha);
    const Eigen::Matrix4cd b =
        oracle::rdm(full.amplitudes(), n, 0, alpha);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("reduced_density_matrix extracts the symmetric form") {
  const StateVector g = ground_state(8, 0.4);
  const TwoSiteRDM rdm = reduced_density_matrix(g, 0, 1);
  const Eigen::Matrix4cd raw = rdm_matrix(g, 0, 1);
  CHECK(std::abs(rdm.v - raw(0, 0).real()) < 1e-12);
  CHECK(std::abs(rdm.w - raw(1, 1).real()) < 1e-12);
  CHECK(std::abs(rdm.z - raw(1, 2)) < 1e-12);
  CHECK(std::abs(2 * rdm.v + 2 * rdm.w - 1.0) < 1e-10);
  CHECK(rdm.site_i == 0);
  CHECK(rdm.site_j == 1);
}

TEST_CASE("reduced_density_matrix rejects off-form states") {
  Eigen::VectorXcd up = Eigen::VectorXcd::Zero(1 << 4);
  up[(1 << 4) - 1] = 1.0;  // all spins up: v_uu = 1, v_dd = 0
  CHECK_THROWS_AS(
      reduced_density_matrix(StateVector::full(4, up), 0, 1),
      StructureError);

  // generic Sz = 0 state: no spin-flip symmetry, v_uu != v_dd
  const Eigen::VectorXcd psi = oracle::random_sz_state(6, 0, 21);
  CHECK_THROWS_AS(
      reduced_density_matrix(StateVector::full(6, psi), 0, 1),
      StructureError);
  try {
    reduced_density_matrix(StateVector::full(6, psi), 0, 1);
  } catch (const StructureError& err) {
    // the offending matrix rides along for diagnostics
    CHECK(std::abs(err.rho.trace().real() - 1.0) < 1e-12);
  }
}

TEST_CASE("site pair validation") {
  const StateVector g = ground_state(6, 0.2);
  CHECK_THROWS_AS(rdm_matrix(g, 2, 2), ShapeError);
  CHECK_THROWS_AS(rdm_matrix(g, 0, 6), ShapeError);
  CHECK_THROWS_AS(isotropic_correlator(g, -1, 3), ShapeError);
}

TEST_CASE("isotropic_correlator matches the oracle on eigenstates") {
  const int n = 8;
  const StateVector g = ground_state(n, 0.7);
  const StateVector full = g.to_full();
  for (auto [i, j] : std::vector<std::pair<int, int>>{
           {0, 1}, {0, 2}, {0, 4}, {3, 5}}) {
    const Eigen::MatrixXd op = oracle::spin_dot_matrix(n, i, j);
    const double expect =
        (full.amplitudes().adjoint() * op * full.amplitudes())(0).real();
    CHECK(std::abs(isotropic_correlator(g, i, j) - 4.0 * expect) < 1e-11);
  }
}

TEST_CASE("correlator profile is translation invariant on momentum states") {
  const StateVector g = ground_state(10, 0.35);
  for (int alpha : {1, 2, 3, 5}) {
    const double base = isotropic_correlator(g, 0, alpha);
    for (int i = 1; i < 10; ++i)
      CHECK(std::abs(isotropic_correlator(g, i, (i + alpha) % 10) - base) <
            1e-10);
  }
}

TEST_CASE("bond sums agree with pairwise correlators and the energy") {
  const int n = 8;
  const double j = 0.45;
  RingSolver rings(n);
  const auto result =
      rings.lowest_levels(CouplingParams::uniform(n, 1.0, j), 1);
  const StateVector& g = result.levels[0].vector;
  const BondSums sums = bond_sums(g);

  double h0 = 0.0, h = 0.0;
  for (int i = 0; i < n; ++i) {
    h0 += isotropic_correlator(g, i, (i + 1) % n) / 4.0;
    h += isotropic_correlator(g, i, (i + 2) % n) / 4.0;
  }
  CHECK(std::abs(sums.h0 - h0) < 1e-10);
  CHECK(std::abs(sums.h - h) < 1e-10);

  // E = j0*h0 + j*h for the ring
  CHECK(std::abs(result.levels[0].energy - (sums.h0 + j * sums.h)) < 1e-9);
}

TEST_CASE("correlator_report profiles every separation") {
  const int n = 8;
  const StateVector g = ground_state(n, 0.3);
  const CorrelatorReport report = correlator_report(g);
  REQUIRE(report.g_dot.size() == 4);
  for (int alpha = 1; alpha <= 4; ++alpha) {
    double mean = 0.0;
    for (int i = 0; i < n; ++i)
      mean += isotropic_correlator(g, i, (i + alpha) % n);
    mean /= n;
    CHECK(std::abs(report.g_dot[static_cast<std::size_t>(alpha - 1)] - mean) <
          1e-10);
  }
  const BondSums sums = bond_sums(g);
  CHECK(report.h0 == doctest::Approx(sums.h0).epsilon(1e-12));
  CHECK(report.h == doctest::Approx(sums.h).epsilon(1e-12));
}

TEST_CASE("energy derivatives reproduce the bond correlators") {
  const CouplingParams params = CouplingParams::uniform(8, 1.0, 0.2);
  const DerivativeCheck check = energy_derivative_check(params, 1e-4);
  CHECK(std::abs(check.de_dj - check.h) < 1e-6);
  CHECK(std::abs(check.de_dj0 - check.h0) < 1e-6);
}

TEST_CASE("energy derivative check refuses a degenerate ground state") {
  // j = j0/2 is exactly the doubly degenerate dimer point
  const CouplingParams params = CouplingParams::uniform(6, 1.0, 0.5);
  CHECK_THROWS_AS(energy_derivative_check(params, 1e-4), AmbiguityError);
}

TEST_CASE("spin-zero sum rule fixes the all-pairs correlator total") {
  for (int n : {6, 8}) {
    for (double j : {0.1, 0.8}) {
      const StateVector g = ground_state(n, j);
      double total = 0.0;
      for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
          total += isotropic_correlator(g, i, k) / 4.0;
      CHECK(std::abs(total - (-3.0 * n / 8.0)) < 1e-9);
    }
  }
}

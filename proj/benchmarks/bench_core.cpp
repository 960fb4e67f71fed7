#include <benchmark/benchmark.h>

#include <complex>
#include <memory>
#include <random>

#include "spinring/basis.hpp"
#include "spinring/hamiltonian.hpp"
#include "spinring/observables.hpp"
#include "spinring/spectra.hpp"

namespace {

using spinring::CouplingParams;
using spinring::MomentumBasis;
using spinring::SectorSolver;
using spinring::StateVector;
using spinring::SymmetrySector;
using spinring::SzBasis;

Eigen::VectorXcd random_vector(Eigen::Index dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist;
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    v[i] = std::complex<double>(dist(rng), dist(rng));
  v.normalize();
  return v;
}

void BM_sz_basis_build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SzBasis basis(n, 0);
    benchmark::DoNotOptimize(basis.dim());
  }
}
BENCHMARK(BM_sz_basis_build)->Arg(12)->Arg(16)->Arg(20);

void BM_momentum_basis_build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MomentumBasis basis(SymmetrySector{0, 0}, n);
    benchmark::DoNotOptimize(basis.dim());
  }
}
BENCHMARK(BM_momentum_basis_build)->Arg(12)->Arg(16);

void BM_momentum_matvec(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto basis = std::make_shared<MomentumBasis>(SymmetrySector{0, 0}, n);
  const auto components = sector_components(*basis);
  const CouplingParams params = CouplingParams::uniform(n, 1.0, 0.6);
  const Eigen::SparseMatrix<std::complex<double>> h =
      params.j0 * components.nn + params.j1 * components.nnn;
  Eigen::VectorXcd in = random_vector(static_cast<Eigen::Index>(basis->dim()), 7);
  Eigen::VectorXcd out(in.size());
  for (auto _ : state) {
    out.noalias() = h * in;
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_momentum_matvec)->Arg(12)->Arg(16)->Arg(20);

void BM_sector_ground(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SectorSolver solver(n, SymmetrySector{0, 0});
  const CouplingParams params = CouplingParams::uniform(n, 1.0, 0.6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solver.ground_energy(params));
  }
}
BENCHMARK(BM_sector_ground)->Arg(10)->Arg(12)->Arg(14);

void BM_rdm_ring(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto basis = std::make_shared<SzBasis>(n, 0);
  const StateVector psi(basis,
                        random_vector(static_cast<Eigen::Index>(basis->dim()), 3));
  for (auto _ : state) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      acc += spinring::rdm_matrix(psi, i, (i + 1) % n)(0, 0).real();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_rdm_ring)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();

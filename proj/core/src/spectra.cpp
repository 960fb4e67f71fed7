#include "spinring/spectra.hpp"

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <tuple>

#include "spinring/errors.hpp"
#include "spinring/util.hpp"

namespace spinring {

namespace {

constexpr std::size_t kDenseSolveThreshold = 512;

std::uint64_t sector_seed(int n_sites, const SymmetrySector& sector) {
  return (static_cast<std::uint64_t>(n_sites) << 32) ^
         (static_cast<std::uint64_t>(sector.sz_twice + 64) << 16) ^
         static_cast<std::uint64_t>(sector.momentum_index);
}

}  // namespace

const EigenLevel* SpectrumResult::first_excited() const {
  if (levels.empty()) return nullptr;
  const int ground_group = levels.front().degeneracy_group;
  for (const EigenLevel& level : levels)
    if (level.degeneracy_group != ground_group) return &level;
  return nullptr;
}

SectorSolver::SectorSolver(int n_sites, const SymmetrySector& sector,
                           std::shared_ptr<const SzBasis> parent)
    : basis_(parent
                 ? std::make_shared<const MomentumBasis>(sector,
                                                         std::move(parent))
                 : std::make_shared<const MomentumBasis>(sector, n_sites)),
      components_(sector_components(*basis_)) {}

Eigen::SparseMatrix<std::complex<double>> SectorSolver::assemble(
    const CouplingParams& params) const {
  if (!params.uniform_nnn())
    throw UnsupportedError(
        "j1 != j2 does not commute with translation; momentum blocks are "
        "defined only for the uniform coupling");
  if (params.n_sites != basis_->n_sites())
    throw ShapeError("coupling parameters and sector disagree on n_sites");
  return params.j0 * components_.nn + params.j1 * components_.nnn;
}

std::vector<SectorSolver::Pair> SectorSolver::lowest(
    const CouplingParams& params, int m) const {
  const Eigen::Index dim = static_cast<Eigen::Index>(basis_->dim());
  std::vector<Pair> out;
  if (dim == 0 || m <= 0) return out;
  m = static_cast<int>(std::min<Eigen::Index>(m, dim));
  const auto matrix = assemble(params);

  const auto residual_of = [&](double energy, const Eigen::VectorXcd& v) {
    return (matrix * v - energy * v).norm();
  };

  if (basis_->dim() <= kDenseSolveThreshold) {
    const Eigen::MatrixXcd dense(matrix);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
    if (solver.info() != Eigen::Success)
      throw SolverError("dense eigensolver failed", 0.0);
    for (int i = 0; i < m; ++i) {
      Pair p{solver.eigenvalues()[i], solver.eigenvectors().col(i), 0.0};
      p.residual = residual_of(p.energy, p.vector);
      out.push_back(std::move(p));
    }
  } else {
    LanczosOptions options;
    options.seed_tag = sector_seed(basis_->n_sites(), basis_->sector());
    LanczosResult r = lanczos_lowest(
        [&matrix](const Eigen::VectorXcd& in, Eigen::VectorXcd& w) {
          w.noalias() = matrix * in;
        },
        dim, m, options);
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
      Pair p{r.eigenvalues[i], std::move(r.eigenvectors[i]), 0.0};
      p.residual = residual_of(p.energy, p.vector);
      out.push_back(std::move(p));
    }
  }
  for (const Pair& p : out)
    if (p.residual > 1e-10 * std::max(1.0, std::abs(p.energy)))
      throw SolverError("eigenpair residual above tolerance", p.residual);
  return out;
}

double SectorSolver::ground_energy(const CouplingParams& params) const {
  if (basis_->dim() == 0)
    throw InvalidSectorError("empty momentum sector has no spectrum");
  if (basis_->dim() <= kDenseSolveThreshold) {
    const auto matrix = assemble(params);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        Eigen::MatrixXcd(matrix), Eigen::EigenvaluesOnly);
    return solver.eigenvalues()[0];
  }
  return lowest(params, 1).front().energy;
}

RingSolver::RingSolver(int n_sites) : n_sites_(n_sites) {}

const SectorSolver& RingSolver::sector(const SymmetrySector& sector) {
  const auto key = std::make_pair(sector.sz_twice, sector.momentum_index);
  auto it = solvers_.find(key);
  if (it != solvers_.end()) return *it->second;
  auto& parent = sz_bases_[sector.sz_twice];
  if (!parent)
    parent = std::make_shared<const SzBasis>(n_sites_, sector.sz_twice);
  auto solver = std::make_unique<SectorSolver>(n_sites_, sector, parent);
  return *solvers_.emplace(key, std::move(solver)).first->second;
}

void RingSolver::prebuild() {
  for (int sz = 0; sz <= n_sites_; sz += 2)
    for (int k = 0; k < n_sites_; ++k) sector({sz, k});
}

SpectrumResult RingSolver::lowest_levels(const CouplingParams& params, int m,
                                         int n_threads) {
  if (m < 1) throw ShapeError("at least one level must be requested");
  if (params.n_sites != n_sites_)
    throw ShapeError("coupling parameters and solver disagree on n_sites");
  prebuild();
  std::vector<SymmetrySector> sectors;
  for (int sz = 0; sz <= n_sites_; sz += 2)
    for (int k = 0; k < n_sites_; ++k) sectors.push_back({sz, k});

  std::vector<std::vector<SectorSolver::Pair>> per_sector(sectors.size());
  parallel_for(
      sectors.size(),
      [&](std::size_t i) {
        per_sector[i] = sector(sectors[i]).lowest(params, m);
      },
      n_threads);

  SpectrumResult result;
  result.n_requested = m;
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    const auto& basis = sector(sectors[i]).basis_ptr();
    for (auto& pair : per_sector[i])
      result.levels.push_back(EigenLevel{
          pair.energy, sectors[i],
          StateVector(basis, std::move(pair.vector)), 0});
  }
  std::sort(result.levels.begin(), result.levels.end(),
            [](const EigenLevel& a, const EigenLevel& b) {
              return std::tie(a.energy, a.sector.sz_twice,
                              a.sector.momentum_index) <
                     std::tie(b.energy, b.sector.sz_twice,
                              b.sector.momentum_index);
            });
  if (result.levels.size() > static_cast<std::size_t>(m))
    result.levels.erase(result.levels.begin() + m, result.levels.end());

  int group = 0;
  double group_start = result.levels.empty() ? 0.0 : result.levels[0].energy;
  for (std::size_t i = 0; i < result.levels.size(); ++i) {
    if (result.levels[i].energy - group_start >
        degeneracy_tolerance(group_start)) {
      ++group;
      group_start = result.levels[i].energy;
    }
    result.levels[i].degeneracy_group = group;
  }
  return result;
}

double RingSolver::sector_ground_energy(const CouplingParams& params,
                                        const SymmetrySector& s) {
  return sector(s).ground_energy(params);
}

SpectrumResult lowest_levels(const CouplingParams& params, int m,
                             int n_threads) {
  RingSolver solver(params.n_sites);
  return solver.lowest_levels(params, m, n_threads);
}

MomentumMeasurement measure_momentum(const StateVector& state) {
  if (state.kind() == StateVector::Kind::Momentum)
    return {state.momentum_basis()->sector().momentum_index, 1.0, true};
  const StateVector shifted = apply_translation(state);
  const double norm2 = state.amplitudes().squaredNorm();
  if (norm2 == 0.0) throw ShapeError("cannot measure the zero vector");
  const std::complex<double> c =
      state.amplitudes().dot(shifted.amplitudes()) / norm2;
  MomentumMeasurement out;
  out.fidelity = std::abs(c);
  const int n = state.n_sites();
  const double turns = std::arg(c) * n / (2.0 * std::numbers::pi);
  out.momentum_index = (static_cast<int>(std::lround(turns)) % n + n) % n;
  out.is_eigenstate = out.fidelity >= 0.999;
  return out;
}

double total_spin(const StateVector& state) {
  const StateVector s = state.kind() == StateVector::Kind::Momentum
                            ? state.to_sz_sector()
                            : state;
  const int n = s.n_sites();
  const double norm2 = s.amplitudes().squaredNorm();
  if (norm2 == 0.0) throw ShapeError("cannot measure the zero vector");
  double pair_sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const StateVector dotted = apply_spin_dot(s, i, j);
      pair_sum += s.amplitudes().dot(dotted.amplitudes()).real();
    }
  return 0.75 * n + 2.0 * pair_sum / norm2;
}

}  // namespace spinring

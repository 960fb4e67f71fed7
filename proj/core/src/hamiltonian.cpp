#include "spinring/hamiltonian.hpp"

#include <cmath>
#include <vector>

#include "spinring/errors.hpp"

namespace spinring {

namespace {

struct Bond {
  config_t mask_i;
  config_t mask_j;
};

enum class BondSet { NN, NNNEven, NNNOdd, NNNAll };

std::vector<Bond> make_bonds(int n_sites, BondSet set) {
  std::vector<Bond> bonds;
  const auto bit = [](int s) { return config_t{1} << s; };
  for (int i = 0; i < n_sites; ++i) {
    switch (set) {
      case BondSet::NN:
        bonds.push_back({bit(i), bit((i + 1) % n_sites)});
        break;
      case BondSet::NNNEven:
        if (i % 2 == 0) bonds.push_back({bit(i), bit((i + 2) % n_sites)});
        break;
      case BondSet::NNNOdd:
        if (i % 2 == 1) bonds.push_back({bit(i), bit((i + 2) % n_sites)});
        break;
      case BondSet::NNNAll:
        bonds.push_back({bit(i), bit((i + 2) % n_sites)});
        break;
    }
  }
  return bonds;
}

// sum_bonds S_i.S_j on a configuration-indexed vector. `lookup` maps a bit
// pattern to its vector index (identity for the full basis).
template <typename Lookup>
void apply_bonds(const std::vector<Bond>& bonds, const Lookup& lookup,
                 const std::vector<config_t>& configs,
                 const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
  for (Eigen::Index idx = 0; idx < in.size(); ++idx) {
    const config_t c = configs.empty() ? static_cast<config_t>(idx)
                                       : configs[static_cast<std::size_t>(idx)];
    const std::complex<double> amp = in[idx];
    if (amp == std::complex<double>{}) continue;
    for (const Bond& b : bonds) {
      const bool up_i = c & b.mask_i;
      const bool up_j = c & b.mask_j;
      if (up_i == up_j) {
        out[idx] += 0.25 * amp;
      } else {
        out[idx] -= 0.25 * amp;
        const config_t flipped = c ^ (b.mask_i | b.mask_j);
        const auto target = lookup(flipped);
        if (target >= 0) out[target] += 0.5 * amp;
      }
    }
  }
}

void apply_bonds_dispatch(const std::vector<Bond>& bonds,
                          const StateVector& state, Eigen::VectorXcd& out) {
  static const std::vector<config_t> kNoConfigs;
  if (state.kind() == StateVector::Kind::Full) {
    apply_bonds(
        bonds, [](config_t f) { return static_cast<Eigen::Index>(f); },
        kNoConfigs, state.amplitudes(), out);
    return;
  }
  const SzBasis& basis = *state.sz_basis();
  apply_bonds(
      bonds,
      [&basis](config_t f) -> Eigen::Index {
        const auto i = basis.index_of(f);
        return i ? static_cast<Eigen::Index>(*i) : Eigen::Index{-1};
      },
      basis.configs(), state.amplitudes(), out);
}

// Same bond sum, but within one momentum block: bonds act on orbit
// representatives and flipped patterns are folded back onto their
// representative with the accumulated phase and norm ratio.
void apply_bonds_momentum(const std::vector<Bond>& bonds,
                          const MomentumBasis& mb, const Eigen::VectorXcd& in,
                          Eigen::VectorXcd& out) {
  const int n = mb.n_sites();
  const auto& orbits = mb.orbits();
  for (Eigen::Index a = 0; a < in.size(); ++a) {
    const std::complex<double> amp = in[a];
    if (amp == std::complex<double>{}) continue;
    const config_t rep = orbits[static_cast<std::size_t>(a)].representative;
    const double r_a = orbits[static_cast<std::size_t>(a)].period;
    for (const Bond& b : bonds) {
      const bool up_i = rep & b.mask_i;
      const bool up_j = rep & b.mask_j;
      if (up_i == up_j) {
        out[a] += 0.25 * amp;
        continue;
      }
      out[a] -= 0.25 * amp;
      const config_t flipped = rep ^ (b.mask_i | b.mask_j);
      const OrbitLocation loc = locate_orbit(flipped, n);
      const auto row = mb.index_of_representative(loc.representative);
      if (!row) continue;  // orbit incompatible with this momentum
      out[static_cast<Eigen::Index>(*row)] +=
          0.5 * amp * mb.phases()[loc.shift] * std::sqrt(r_a / loc.period);
    }
  }
}

Eigen::VectorXcd zero_like(const StateVector& state) {
  return Eigen::VectorXcd::Zero(state.dim());
}

StateVector wrap_like(const StateVector& state, Eigen::VectorXcd amplitudes) {
  switch (state.kind()) {
    case StateVector::Kind::Full:
      return StateVector::full(state.n_sites(), std::move(amplitudes));
    case StateVector::Kind::Sz:
      return StateVector(state.sz_basis(), std::move(amplitudes));
    case StateVector::Kind::Momentum:
      return StateVector(state.momentum_basis(), std::move(amplitudes));
  }
  throw ShapeError("unreachable state kind");
}

void check_sites_match(const CouplingParams& params, const StateVector& state) {
  if (params.n_sites != state.n_sites())
    throw ShapeError("coupling parameters and state disagree on n_sites");
}

}  // namespace

HamiltonianParts apply_hamiltonian_parts(const StateVector& state) {
  if (state.kind() == StateVector::Kind::Momentum)
    throw UnsupportedError(
        "even/odd bond parts are not translation covariant; expand the "
        "state to its Sz sector first");
  const int n = state.n_sites();
  HamiltonianParts parts{zero_like(state), zero_like(state), zero_like(state)};
  apply_bonds_dispatch(make_bonds(n, BondSet::NN), state, parts.nn);
  apply_bonds_dispatch(make_bonds(n, BondSet::NNNEven), state, parts.nnn_even);
  apply_bonds_dispatch(make_bonds(n, BondSet::NNNOdd), state, parts.nnn_odd);
  return parts;
}

StateVector apply_hamiltonian(const CouplingParams& params,
                              const StateVector& state) {
  check_sites_match(params, state);
  if (state.kind() == StateVector::Kind::Momentum) {
    if (!params.uniform_nnn())
      throw UnsupportedError(
          "j1 != j2 does not commute with translation; momentum blocks are "
          "defined only for the uniform coupling");
    const MomentumBasis& mb = *state.momentum_basis();
    Eigen::VectorXcd nn = zero_like(state);
    Eigen::VectorXcd nnn = zero_like(state);
    apply_bonds_momentum(make_bonds(params.n_sites, BondSet::NN), mb,
                         state.amplitudes(), nn);
    apply_bonds_momentum(make_bonds(params.n_sites, BondSet::NNNAll), mb,
                         state.amplitudes(), nnn);
    return wrap_like(state, params.j0 * nn + params.j1 * nnn);
  }
  const HamiltonianParts parts = apply_hamiltonian_parts(state);
  return wrap_like(state, params.j0 * parts.nn + params.j1 * parts.nnn_even +
                              params.j2 * parts.nnn_odd);
}

StateVector apply_spin_dot(const StateVector& state, int i, int j) {
  const int n = state.n_sites();
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw ShapeError("spin-dot sites out of range or equal");
  if (state.kind() == StateVector::Kind::Momentum)
    throw UnsupportedError(
        "a single S_i.S_j is not translation covariant; expand the state to "
        "its Sz sector first");
  const std::vector<Bond> bond = {
      {config_t{1} << i, config_t{1} << j}};
  Eigen::VectorXcd out = zero_like(state);
  apply_bonds_dispatch(bond, state, out);
  return wrap_like(state, std::move(out));
}

StateVector apply_translation(const StateVector& state) {
  const int n = state.n_sites();
  switch (state.kind()) {
    case StateVector::Kind::Full: {
      Eigen::VectorXcd out = zero_like(state);
      for (Eigen::Index c = 0; c < state.dim(); ++c)
        out[translate_bits(static_cast<config_t>(c), n, 1)] =
            state.amplitudes()[c];
      return wrap_like(state, std::move(out));
    }
    case StateVector::Kind::Sz: {
      const SzBasis& basis = *state.sz_basis();
      Eigen::VectorXcd out = zero_like(state);
      for (Eigen::Index idx = 0; idx < state.dim(); ++idx) {
        const config_t moved = translate_bits(
            basis.config_at(static_cast<std::size_t>(idx)), n, 1);
        out[static_cast<Eigen::Index>(*basis.index_of(moved))] =
            state.amplitudes()[idx];
      }
      return wrap_like(state, std::move(out));
    }
    case StateVector::Kind::Momentum: {
      // T|a(k)> = e^{+ik}|a(k)>
      const std::complex<double> phase =
          std::conj(state.momentum_basis()->phases()[1]);
      return wrap_like(state, phase * state.amplitudes());
    }
  }
  throw ShapeError("unreachable state kind");
}

SectorComponents sector_components(const MomentumBasis& basis) {
  const Eigen::Index dim = static_cast<Eigen::Index>(basis.dim());
  SectorComponents comps{{dim, dim}, {dim, dim}};
  const auto build = [&](BondSet set,
                         Eigen::SparseMatrix<std::complex<double>>& m) {
    std::vector<Eigen::Triplet<std::complex<double>>> triplets;
    Eigen::VectorXcd column = Eigen::VectorXcd::Zero(dim);
    const auto bonds = make_bonds(basis.n_sites(), set);
    Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(dim);
    for (Eigen::Index a = 0; a < dim; ++a) {
      unit[a] = 1.0;
      column.setZero();
      apply_bonds_momentum(bonds, basis, unit, column);
      unit[a] = 0.0;
      for (Eigen::Index b = 0; b < dim; ++b)
        if (column[b] != std::complex<double>{})
          triplets.emplace_back(b, a, column[b]);
    }
    m.setFromTriplets(triplets.begin(), triplets.end());
  };
  build(BondSet::NN, comps.nn);
  build(BondSet::NNNAll, comps.nnn);
  return comps;
}

Eigen::MatrixXcd hamiltonian_matrix(const CouplingParams& params,
                                    const SymmetrySector& sector,
                                    std::size_t cap) {
  if (!params.uniform_nnn())
    throw UnsupportedError(
        "j1 != j2 does not commute with translation; momentum blocks are "
        "defined only for the uniform coupling");
  const MomentumBasis basis(sector, params.n_sites);
  if (basis.dim() > cap) throw TooLargeError("momentum block exceeds cap");
  const SectorComponents comps = sector_components(basis);
  return Eigen::MatrixXcd(params.j0 * comps.nn + params.j1 * comps.nnn);
}

namespace {

Eigen::MatrixXd dense_config_matrix(const CouplingParams& params,
                                    const std::vector<config_t>& configs,
                                    const SzBasis* basis, std::size_t cap) {
  const std::size_t dim = basis ? basis->dim() : configs.size();
  if (dim > cap) throw TooLargeError("dense block exceeds cap");
  const int n = params.n_sites;
  struct Weighted {
    std::vector<Bond> bonds;
    double w;
  };
  const Weighted sets[] = {
      {make_bonds(n, BondSet::NN), params.j0},
      {make_bonds(n, BondSet::NNNEven), params.j1},
      {make_bonds(n, BondSet::NNNOdd), params.j2},
  };
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const config_t c = configs[col];
    for (const auto& [bonds, w] : sets) {
      if (w == 0.0) continue;
      for (const Bond& b : bonds) {
        const bool up_i = c & b.mask_i;
        const bool up_j = c & b.mask_j;
        if (up_i == up_j) {
          m(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) +=
              0.25 * w;
          continue;
        }
        m(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) -=
            0.25 * w;
        const config_t flipped = c ^ (b.mask_i | b.mask_j);
        Eigen::Index row;
        if (basis) {
          const auto idx = basis->index_of(flipped);
          if (!idx) continue;
          row = static_cast<Eigen::Index>(*idx);
        } else {
          row = static_cast<Eigen::Index>(flipped);
        }
        m(row, static_cast<Eigen::Index>(col)) += 0.5 * w;
      }
    }
  }
  return m;
}

}  // namespace

Eigen::MatrixXd sz_block_matrix(const CouplingParams& params, int sz_twice,
                                std::size_t cap) {
  const SzBasis basis(params.n_sites, sz_twice);
  return dense_config_matrix(params, basis.configs(), &basis, cap);
}

Eigen::MatrixXd full_matrix(const CouplingParams& params, std::size_t cap) {
  const std::size_t dim = std::size_t{1} << params.n_sites;
  if (dim > cap) throw TooLargeError("full space exceeds cap");
  std::vector<config_t> configs(dim);
  for (std::size_t c = 0; c < dim; ++c) configs[c] = static_cast<config_t>(c);
  return dense_config_matrix(params, configs, nullptr, cap);
}

}  // namespace spinring

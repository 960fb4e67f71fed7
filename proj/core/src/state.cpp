#include "spinring/state.hpp"

#include <cmath>

#include "spinring/errors.hpp"

namespace spinring {

StateVector StateVector::full(int n_sites, Eigen::VectorXcd amplitudes) {
  if (n_sites > 24) throw TooLargeError("full-space state limited to 24 sites");
  if (amplitudes.size() != (Eigen::Index{1} << n_sites))
    throw ShapeError("amplitude count does not match 2^n_sites");
  StateVector s;
  s.kind_ = Kind::Full;
  s.n_sites_ = n_sites;
  s.amplitudes_ = std::move(amplitudes);
  return s;
}

StateVector StateVector::zero_full(int n_sites) {
  if (n_sites > 24) throw TooLargeError("full-space state limited to 24 sites");
  return full(n_sites,
              Eigen::VectorXcd::Zero(Eigen::Index{1} << n_sites));
}

StateVector::StateVector(std::shared_ptr<const SzBasis> basis,
                         Eigen::VectorXcd amplitudes)
    : kind_(Kind::Sz),
      n_sites_(basis->n_sites()),
      amplitudes_(std::move(amplitudes)),
      sz_basis_(std::move(basis)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != sz_basis_->dim())
    throw ShapeError("amplitude count does not match sector dimension");
}

StateVector::StateVector(std::shared_ptr<const MomentumBasis> basis,
                         Eigen::VectorXcd amplitudes)
    : kind_(Kind::Momentum),
      n_sites_(basis->n_sites()),
      amplitudes_(std::move(amplitudes)),
      momentum_basis_(std::move(basis)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != momentum_basis_->dim())
    throw ShapeError("amplitude count does not match sector dimension");
}

void StateVector::normalize() {
  const double n = amplitudes_.norm();
  if (n == 0.0) throw ShapeError("cannot normalize the zero vector");
  amplitudes_ /= n;
}

StateVector StateVector::to_sz_sector() const {
  if (kind_ == Kind::Sz) return *this;
  if (kind_ == Kind::Full)
    throw ShapeError("full states carry no single-Sz sector");
  const MomentumBasis& mb = *momentum_basis_;
  const auto parent = mb.parent();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(parent->dim());
  for (std::size_t a = 0; a < mb.dim(); ++a) {
    const TranslationOrbit& orb = mb.orbits()[a];
    const std::complex<double> w =
        amplitudes_[static_cast<Eigen::Index>(a)] / std::sqrt(double(orb.period));
    for (int r = 0; r < orb.period; ++r) {
      const config_t c = translate_bits(orb.representative, n_sites_, r);
      const auto idx = parent->index_of(c);
      out[static_cast<Eigen::Index>(*idx)] += w * mb.phases()[r];
    }
  }
  return StateVector(parent, std::move(out));
}

StateVector StateVector::to_full() const {
  if (kind_ == Kind::Full) return *this;
  const StateVector sz = to_sz_sector();
  StateVector out = zero_full(n_sites_);
  const auto& configs = sz.sz_basis_->configs();
  for (std::size_t i = 0; i < configs.size(); ++i)
    out.amplitudes_[configs[i]] = sz.amplitudes_[static_cast<Eigen::Index>(i)];
  return out;
}

std::complex<double> inner_product(const StateVector& bra,
                                   const StateVector& ket) {
  if (bra.n_sites() != ket.n_sites())
    throw ShapeError("states live on different rings");
  if (bra.kind() == ket.kind()) {
    const bool same_basis =
        (bra.kind() == StateVector::Kind::Full) ||
        (bra.kind() == StateVector::Kind::Sz &&
         bra.sz_basis()->sz_twice() == ket.sz_basis()->sz_twice()) ||
        (bra.kind() == StateVector::Kind::Momentum &&
         bra.momentum_basis()->sector() == ket.momentum_basis()->sector());
    if (same_basis) {
      if (bra.dim() != ket.dim()) throw ShapeError("dimension mismatch");
      return bra.amplitudes().dot(ket.amplitudes());
    }
  }
  const StateVector a = bra.to_full();
  const StateVector b = ket.to_full();
  return a.amplitudes().dot(b.amplitudes());
}

}  // namespace spinring

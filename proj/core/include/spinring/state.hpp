#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>

#include "spinring/basis.hpp"

namespace spinring {

// A wavefunction together with the basis its amplitudes refer to.  Three
// representations are supported:
//   Full     : all 2^N configurations, index = bit pattern
//   Sz       : one magnetization sector, indexed through an SzBasis
//   Momentum : translation-adapted orbits inside one (Sz, k) sector
class StateVector {
 public:
  enum class Kind { Full, Sz, Momentum };

  static StateVector full(int n_sites, Eigen::VectorXcd amplitudes);
  static StateVector zero_full(int n_sites);
  StateVector(std::shared_ptr<const SzBasis> basis, Eigen::VectorXcd amplitudes);
  StateVector(std::shared_ptr<const MomentumBasis> basis,
              Eigen::VectorXcd amplitudes);

  Kind kind() const { return kind_; }
  int n_sites() const { return n_sites_; }
  Eigen::Index dim() const { return amplitudes_.size(); }

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Eigen::VectorXcd& amplitudes() { return amplitudes_; }

  const std::shared_ptr<const SzBasis>& sz_basis() const { return sz_basis_; }
  const std::shared_ptr<const MomentumBasis>& momentum_basis() const {
    return momentum_basis_;
  }

  double norm() const { return amplitudes_.norm(); }
  void normalize();

  // Unpacks a momentum-adapted state into its parent Sz sector: orbit
  // amplitude c_a contributes c_a * e^{-ikr} / sqrt(R_a) to T^r|a> for
  // r = 0 .. R_a-1.  Sz states copy, Full states are rejected.
  StateVector to_sz_sector() const;

  // Embeds into the full 2^N space.  Guarded at n_sites <= 24.
  StateVector to_full() const;

 private:
  StateVector() = default;

  Kind kind_ = Kind::Full;
  int n_sites_ = 0;
  Eigen::VectorXcd amplitudes_;
  std::shared_ptr<const SzBasis> sz_basis_;
  std::shared_ptr<const MomentumBasis> momentum_basis_;
};

std::complex<double> inner_product(const StateVector& bra,
                                   const StateVector& ket);

}  // namespace spinring

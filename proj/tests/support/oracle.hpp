#pragma once

// Brute-force reference implementations for the tests. Everything here is
// built in the full 2^n configuration basis with plain loops, deliberately
// sharing no code with the library beyond Eigen itself, so that agreement
// between the two is meaningful.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

inline int bit(std::uint32_t c, int i) { return (c >> i) & 1; }

// S_i.S_j in the full 2^n basis, bit set = up.
inline Eigen::MatrixXd spin_dot_matrix(int n, int i, int j) {
  const std::uint32_t dim = std::uint32_t{1} << n;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (std::uint32_t c = 0; c < dim; ++c) {
    if (bit(c, i) == bit(c, j)) {
      m(c, c) += 0.25;
    } else {
      m(c, c) -= 0.25;
      const std::uint32_t flipped =
          c ^ (std::uint32_t{1} << i) ^ (std::uint32_t{1} << j);
      m(flipped, c) += 0.5;
    }
  }
  return m;
}

// j0 sum_i S_i.S_{i+1} + j1 sum_{i even} S_i.S_{i+2}
//   + j2 sum_{i odd} S_i.S_{i+2}, periodic.
inline Eigen::MatrixXd ring_hamiltonian(int n, double j0, double j1,
                                        double j2) {
  const std::uint32_t dim = std::uint32_t{1} << n;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < n; ++i)
    m += j0 * spin_dot_matrix(n, i, (i + 1) % n);
  for (int i = 0; i < n; i += 2)
    m += j1 * spin_dot_matrix(n, i, (i + 2) % n);
  for (int i = 1; i < n; i += 2)
    m += j2 * spin_dot_matrix(n, i, (i + 2) % n);
  return m;
}

// One-site translation: column c holds |T c>.
inline Eigen::MatrixXd translation_matrix(int n) {
  const std::uint32_t dim = std::uint32_t{1} << n;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (std::uint32_t c = 0; c < dim; ++c) {
    std::uint32_t t = 0;
    for (int i = 0; i < n; ++i)
      if (bit(c, i)) t |= std::uint32_t{1} << ((i + 1) % n);
    m(t, c) = 1.0;
  }
  return m;
}

// Two-site reduced density matrix in the basis {uu, ud, du, dd}, first
// slot = site i. psi must live in the full 2^n basis.
inline Eigen::Matrix4cd rdm(const Eigen::VectorXcd& psi, int n, int i,
                            int j) {
  const std::uint32_t dim = std::uint32_t{1} << n;
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  const std::uint32_t mi = std::uint32_t{1} << i;
  const std::uint32_t mj = std::uint32_t{1} << j;
  for (std::uint32_t c = 0; c < dim; ++c) {
    const int row = ((bit(c, i) ^ 1) << 1) | (bit(c, j) ^ 1);
    const std::uint32_t rest = c & ~(mi | mj);
    for (int col = 0; col < 4; ++col) {
      const std::uint32_t d =
          rest | ((col & 2) ? 0 : mi) | ((col & 1) ? 0 : mj);
      rho(row, col) += psi[c] * std::conj(psi[d]);
    }
  }
  return rho / psi.squaredNorm();
}

// Wootters concurrence of an arbitrary two-qubit density matrix:
// C = max{0, l0 - l1 - l2 - l3}, li the descending square roots of the
// eigenvalues of rho (Y x Y) rho* (Y x Y).
inline double wootters(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix4d yy = Eigen::Matrix4d::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Eigen::Matrix4cd prod = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(prod, false);
  std::array<double, 4> lambda{};
  for (int k = 0; k < 4; ++k)
    lambda[k] = std::sqrt(std::max(0.0, solver.eigenvalues()[k].real()));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

// Deterministic pseudo-random unit vector in the full 2^n basis.
inline Eigen::VectorXcd random_state(int n, std::uint64_t seed) {
  const std::uint32_t dim = std::uint32_t{1} << n;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(dim);
  for (std::uint32_t c = 0; c < dim; ++c)
    v[c] = std::complex<double>(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

// Same, but supported only on configurations with the given 2*Sz.
inline Eigen::VectorXcd random_sz_state(int n, int sz_twice,
                                        std::uint64_t seed) {
  const std::uint32_t dim = std::uint32_t{1} << n;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  for (std::uint32_t c = 0; c < dim; ++c) {
    const int ups = __builtin_popcount(c);
    if (2 * ups - n != sz_twice) continue;
    v[c] = std::complex<double>(gauss(rng), gauss(rng));
  }
  v.normalize();
  return v;
}

inline std::vector<double> eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m,
                                                        Eigen::EigenvaluesOnly);
  return {solver.eigenvalues().data(),
          solver.eigenvalues().data() + solver.eigenvalues().size()};
}

}  // namespace oracle

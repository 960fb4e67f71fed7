#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spinring {

/// Base class for all domain errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sz/momentum sector labels are inconsistent (parity mismatch, out of range).
struct InvalidSectorError : Error {
  using Error::Error;
};

/// A state vector does not match the dimension of the basis it claims.
struct ShapeError : Error {
  using Error::Error;
};

/// Dense-matrix request above the configured size cap.
struct TooLargeError : Error {
  using Error::Error;
};

/// Iterative eigensolver failed to converge; carries the best residual seen.
struct SolverError : Error {
  double best_residual;
  SolverError(const std::string& msg, double residual)
      : Error(msg), best_residual(residual) {}
};

/// A two-site density matrix does not have the symmetric form expected for
/// spin-zero ring states; carries the offending 4x4 matrix.
struct StructureError : Error {
  Eigen::Matrix4cd rho;
  StructureError(const std::string& msg, const Eigen::Matrix4cd& matrix)
      : Error(msg), rho(matrix) {}
};

/// Ground state is degenerate where a unique state is required.
struct AmbiguityError : Error {
  using Error::Error;
};

/// Bracket endpoints have the same groundstate momentum: nothing to bisect.
struct NoCrossingError : Error {
  using Error::Error;
};

/// The pair of states passed as a degenerate doublet has mismatched energies.
struct NotDegenerateError : Error {
  using Error::Error;
};

/// Dimer covering is not a perfect matching of the ring.
struct InvalidCoveringError : Error {
  using Error::Error;
};

/// Requested operation is outside the validity range of a closed form.
struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace spinring

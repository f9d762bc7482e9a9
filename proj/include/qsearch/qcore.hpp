#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace qsearch {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Thrown when a freshly produced value fails its own structural checks
/// (unitarity, trace, positivity). Signals a bug in the producing code,
/// as opposed to std::invalid_argument for bad caller input.
class invariant_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace qcore {

// Tolerances applied by the value types below.
inline constexpr double unitarity_tol = 1e-10;   // max |U†U - 1| entrywise
inline constexpr double state_norm_tol = 1e-8;   // accepted deviation of ||psi|| from 1
inline constexpr double hermiticity_tol = 1e-10; // max |rho - rho†| entrywise
inline constexpr double trace_tol = 1e-10;       // |tr rho - 1|
inline constexpr double psd_tol = 1e-9;          // eigenvalues >= -psd_tol

/// Normalized amplitudes over computational basis states.
/// Qubit 0 is the high-order bit: |q0 q1 ... q(n-1)> sits at index
/// q0*2^(n-1) + q1*2^(n-2) + ... + q(n-1).
class StateVector {
 public:
  /// Rejects vectors whose norm deviates from 1 by more than state_norm_tol,
  /// then renormalizes exactly.
  explicit StateVector(Vector amplitudes);

  static StateVector basis_state(Eigen::Index dimension, Eigen::Index index);

  const Vector& amplitudes() const { return amp_; }
  Eigen::Index dimension() const { return amp_.size(); }
  Complex amplitude(Eigen::Index i) const { return amp_(i); }
  double probability(Eigen::Index i) const { return std::norm(amp_(i)); }

 private:
  Vector amp_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  static DensityMatrix pure(const StateVector& psi);

  const Matrix& matrix() const { return mat_; }
  Eigen::Index dimension() const { return mat_.rows(); }
  double population(Eigen::Index i) const { return mat_(i, i).real(); }

 private:
  Matrix mat_;
};

/// Square matrix with U†U = 1 within unitarity_tol.
class UnitaryOperator {
 public:
  explicit UnitaryOperator(Matrix entries);

  static UnitaryOperator identity(Eigen::Index dimension);

  const Matrix& matrix() const { return mat_; }
  Eigen::Index dimension() const { return mat_.rows(); }

 private:
  Matrix mat_;
};

/// Rotation axes for single-qubit pulses. z is reserved for ideal gates;
/// rf hardware only drives the transverse axes.
enum class Axis { x, y, minus_x, minus_y, z };

// Kronecker products; the left factor carries the high-order qubit(s).
StateVector tensor_product(const StateVector& a, const StateVector& b);
UnitaryOperator tensor_product(const UnitaryOperator& a, const UnitaryOperator& b);

UnitaryOperator adjoint(const UnitaryOperator& u);

StateVector apply(const UnitaryOperator& u, const StateVector& s);

/// u * rho * u†
DensityMatrix conjugate(const UnitaryOperator& u, const DensityMatrix& rho);

/// <a|b> (conjugate-linear in a)
Complex overlap(const StateVector& a, const StateVector& b);

/// True iff u = c*v for some unit-modulus c, max-entry difference <= tol.
/// c is anchored on the largest-magnitude entry of v (first in a row-major
/// scan on ties), which keeps the comparison deterministic.
bool equal_up_to_global_phase(const UnitaryOperator& u, const UnitaryOperator& v,
                              double tol);

/// exp(-i*angle*sigma_axis/2) on `target`, identity elsewhere.
UnitaryOperator single_qubit_rotation(Axis axis, double angle, int target,
                                      int qubit_count);

/// diag(e^{i w0}, e^{i w1}, ...)
UnitaryOperator diagonal_phase_unitary(const Eigen::VectorXd& weights);

}  // namespace qcore
}  // namespace qsearch

#include "qsearch/qcore.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <string>
#include <utility>

namespace qsearch::qcore {

namespace {

std::string describe(double value) { return std::to_string(value); }

}  // namespace

StateVector::StateVector(Vector amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() < 1) {
    throw std::invalid_argument("StateVector: amplitude vector is empty");
  }
  const double norm = amp_.norm();
  if (std::abs(norm - 1.0) > state_norm_tol) {
    throw std::invalid_argument("StateVector: norm deviates from 1 by " +
                                describe(std::abs(norm - 1.0)));
  }
  amp_ /= norm;
}

StateVector StateVector::basis_state(Eigen::Index dimension, Eigen::Index index) {
  if (dimension < 1) {
    throw std::invalid_argument("StateVector: dimension must be positive");
  }
  if (index < 0 || index >= dimension) {
    throw std::invalid_argument("StateVector: basis index out of range");
  }
  Vector v = Vector::Zero(dimension);
  v(index) = 1.0;
  return StateVector(std::move(v));
}

DensityMatrix::DensityMatrix(Matrix entries) : mat_(std::move(entries)) {
  if (mat_.rows() < 1 || mat_.rows() != mat_.cols()) {
    throw std::invalid_argument("DensityMatrix: square matrix required");
  }
  const double herm = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > hermiticity_tol) {
    throw invariant_error("DensityMatrix: not Hermitian, deviation " + describe(herm));
  }
  const double tr = std::abs(mat_.trace() - Complex(1.0));
  if (tr > trace_tol) {
    throw invariant_error("DensityMatrix: trace deviates from 1 by " + describe(tr));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (mat_ + mat_.adjoint()),
                                               Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -psd_tol) {
    throw invariant_error("DensityMatrix: negative eigenvalue " + describe(min_eig));
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const Vector& a = psi.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

UnitaryOperator::UnitaryOperator(Matrix entries) : mat_(std::move(entries)) {
  if (mat_.rows() < 1 || mat_.rows() != mat_.cols()) {
    throw std::invalid_argument("UnitaryOperator: square matrix required");
  }
  const Matrix gram = mat_.adjoint() * mat_;
  const double dev =
      (gram - Matrix::Identity(mat_.rows(), mat_.cols())).cwiseAbs().maxCoeff();
  if (dev > unitarity_tol) {
    throw invariant_error("UnitaryOperator: U†U deviates from identity by " +
                          describe(dev));
  }
}

UnitaryOperator UnitaryOperator::identity(Eigen::Index dimension) {
  if (dimension < 1) {
    throw std::invalid_argument("UnitaryOperator: dimension must be positive");
  }
  return UnitaryOperator(Matrix::Identity(dimension, dimension));
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  Vector v = Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes());
  return StateVector(std::move(v));
}

UnitaryOperator tensor_product(const UnitaryOperator& a, const UnitaryOperator& b) {
  Matrix m = Eigen::kroneckerProduct(a.matrix(), b.matrix());
  return UnitaryOperator(std::move(m));
}

UnitaryOperator adjoint(const UnitaryOperator& u) {
  return UnitaryOperator(u.matrix().adjoint());
}

StateVector apply(const UnitaryOperator& u, const StateVector& s) {
  if (u.dimension() != s.dimension()) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  return StateVector(u.matrix() * s.amplitudes());
}

DensityMatrix conjugate(const UnitaryOperator& u, const DensityMatrix& rho) {
  if (u.dimension() != rho.dimension()) {
    throw std::invalid_argument("conjugate: dimension mismatch");
  }
  return DensityMatrix(u.matrix() * rho.matrix() * u.matrix().adjoint());
}

Complex overlap(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("overlap: dimension mismatch");
  }
  return a.amplitudes().dot(b.amplitudes());
}

bool equal_up_to_global_phase(const UnitaryOperator& u, const UnitaryOperator& v,
                              double tol) {
  if (u.dimension() != v.dimension()) {
    throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("equal_up_to_global_phase: tol must be positive");
  }
  const Matrix& a = u.matrix();
  const Matrix& b = v.matrix();
  Eigen::Index bi = 0;
  Eigen::Index bj = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      const double m = std::abs(b(i, j));
      if (m > best) {
        best = m;
        bi = i;
        bj = j;
      }
    }
  }
  Complex c = a(bi, bj) / b(bi, bj);
  const double cm = std::abs(c);
  c = (cm > 0.0) ? c / cm : Complex(1.0);
  return (a - c * b).cwiseAbs().maxCoeff() <= tol;
}

UnitaryOperator single_qubit_rotation(Axis axis, double angle, int target,
                                      int qubit_count) {
  if (qubit_count < 1) {
    throw std::invalid_argument("single_qubit_rotation: qubit_count must be >= 1");
  }
  if (target < 0 || target >= qubit_count) {
    throw std::invalid_argument("single_qubit_rotation: target index out of range");
  }
  const Complex i(0.0, 1.0);
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Eigen::Matrix2cd r;
  switch (axis) {
    case Axis::x:
      r << c, -i * s, -i * s, c;
      break;
    case Axis::minus_x:
      r << c, i * s, i * s, c;
      break;
    case Axis::y:
      r << c, -s, s, c;
      break;
    case Axis::minus_y:
      r << c, s, -s, c;
      break;
    case Axis::z:
      r << std::exp(-i * (angle / 2.0)), 0.0, 0.0, std::exp(i * (angle / 2.0));
      break;
  }
  const Eigen::Index left = Eigen::Index(1) << target;
  const Eigen::Index right = Eigen::Index(1) << (qubit_count - 1 - target);
  Matrix embedded = Eigen::kroneckerProduct(
      Matrix::Identity(left, left),
      Eigen::kroneckerProduct(r, Matrix::Identity(right, right)).eval());
  return UnitaryOperator(std::move(embedded));
}

UnitaryOperator diagonal_phase_unitary(const Eigen::VectorXd& weights) {
  if (weights.size() < 1) {
    throw std::invalid_argument("diagonal_phase_unitary: empty weight list");
  }
  const Complex i(0.0, 1.0);
  Matrix m = Matrix::Zero(weights.size(), weights.size());
  for (Eigen::Index k = 0; k < weights.size(); ++k) {
    m(k, k) = std::exp(i * weights(k));
  }
  return UnitaryOperator(std::move(m));
}

}  // namespace qsearch::qcore

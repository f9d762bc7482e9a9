#pragma once

// Shared helpers for the test binaries: seeded generators for random
// states/unitaries/density matrices, and independent recomputation routes
// (closed-form rotations, hand-built projectors, eigendecomposition
// iteration) used to derive expected values.

#include "qsearch/qcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace support {

using qsearch::Complex;
using qsearch::Matrix;
using qsearch::Vector;

inline constexpr double pi = std::numbers::pi;

inline Vector random_state_vector(std::mt19937& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = Complex(gauss(rng), gauss(rng));
  }
  v /= v.norm();
  return v;
}

inline Matrix random_unitary_matrix(std::mt19937& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      a(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  return q;
}

inline Matrix random_density_matrix(std::mt19937& rng, Eigen::Index dim) {
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  Matrix rho = Matrix::Zero(dim, dim);
  double total = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Vector v = random_state_vector(rng, dim);
    const double w = unif(rng);
    rho += w * (v * v.adjoint());
    total += w;
  }
  rho /= total;
  return rho;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

namespace oracle {

// closed-form 2x2 rotations, exp(-i*angle*sigma/2)
inline Eigen::Matrix2cd ry(double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

inline Eigen::Matrix2cd rx(double angle) {
  const Complex i(0.0, 1.0);
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Eigen::Matrix2cd m;
  m << c, -i * s, -i * s, c;
  return m;
}

// 1 - (1 - e^{i omega}) |psi><psi| written out entry by entry
inline Matrix selective_phase_outer(const Vector& psi, double omega) {
  const Complex i(0.0, 1.0);
  const Complex coeff = Complex(1.0) - std::exp(i * omega);
  const Eigen::Index d = psi.size();
  Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      m(r, c) = (r == c ? Complex(1.0) : Complex(0.0)) -
                coeff * psi(r) * std::conj(psi(c));
    }
  }
  return m;
}

// 2x2 search-step matrix over {|t>, |s_perp>}, assembled independently of
// the library implementation.
inline Eigen::Matrix2cd two_level_step_matrix(double alpha, double phi,
                                              double varphi, bool modified) {
  const Complex i(0.0, 1.0);
  const double beta = std::sqrt(1.0 - alpha * alpha);
  Eigen::Vector2cd s(alpha, beta);
  const auto source_rot = [&](double omega) {
    return (Eigen::Matrix2cd::Identity() -
            (Complex(1.0) - std::exp(i * omega)) * (s * s.adjoint()))
        .eval();
  };
  const auto target_rot = [&](double omega) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    m(0, 0) = std::exp(i * omega);
    return m;
  };
  Eigen::Matrix2cd g = source_rot(phi) * target_rot(varphi);
  if (!modified) {
    return g;
  }
  return source_rot(-phi) * target_rot(-varphi) * g;
}

// Target probability after q steps, via eigendecomposition rather than
// repeated multiplication: M^q = V diag(lambda^q) V^{-1} with unit-modulus
// eigenvalues raised through their phases.
inline double schedule_probability(double alpha, double phi, double varphi,
                                   bool modified, long q) {
  const Eigen::Matrix2cd m = two_level_step_matrix(alpha, phi, varphi, modified);
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(m);
  const Eigen::Vector2cd eig = solver.eigenvalues();
  const Eigen::Matrix2cd v = solver.eigenvectors();
  Eigen::Matrix2cd dq = Eigen::Matrix2cd::Zero();
  for (int k = 0; k < 2; ++k) {
    const double phase = std::arg(eig(k));
    const double mag = std::abs(eig(k));
    dq(k, k) = std::pow(mag, double(q)) *
               std::exp(Complex(0.0, 1.0) * (phase * double(q)));
  }
  const Eigen::Matrix2cd mq = v * dq * v.inverse();
  const Eigen::Vector2cd s0(alpha, std::sqrt(1.0 - alpha * alpha));
  const Eigen::Vector2cd sq = mq * s0;
  return std::norm(sq(0));
}

// Max target probability over 0..steps.
inline double schedule_peak(double alpha, double phi, double varphi, bool modified,
                            long steps) {
  double best = 0.0;
  for (long q = 0; q <= steps; ++q) {
    best = std::max(best, schedule_probability(alpha, phi, varphi, modified, q));
  }
  return best;
}

inline long schedule_argmax(double alpha, double phi, double varphi, bool modified,
                            long steps) {
  double best = -1.0;
  long arg = 0;
  for (long q = 0; q <= steps; ++q) {
    const double p = schedule_probability(alpha, phi, varphi, modified, q);
    if (p > best) {
      best = p;
      arg = q;
    }
  }
  return arg;
}

}  // namespace oracle
}  // namespace support

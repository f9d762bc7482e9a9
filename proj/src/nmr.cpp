#include "qsearch/nmr.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>

namespace qsearch::nmr {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

// I_z^1 * I_z^2 eigenvalues on |00>, |01>, |10>, |11>.
constexpr std::array<double, 4> zz_eigenvalues = {0.25, -0.25, -0.25, 0.25};

Matrix delay_unitary(double multiple_of_inv_j) {
  const Complex i(0.0, 1.0);
  Matrix m = Matrix::Zero(4, 4);
  for (Eigen::Index k = 0; k < 4; ++k) {
    m(k, k) = std::exp(i * (two_pi * multiple_of_inv_j * zz_eigenvalues[std::size_t(k)]));
  }
  return m;
}

Matrix rf_unitary(const PulseElement& e) {
  switch (e.targets) {
    case SpinTargets::spin1:
      return qcore::single_qubit_rotation(e.axis, e.flip_angle, 0, 2).matrix();
    case SpinTargets::spin2:
      return qcore::single_qubit_rotation(e.axis, e.flip_angle, 1, 2).matrix();
    case SpinTargets::both:
      return qcore::single_qubit_rotation(e.axis, e.flip_angle, 0, 2).matrix() *
             qcore::single_qubit_rotation(e.axis, e.flip_angle, 1, 2).matrix();
  }
  throw std::invalid_argument("rf pulse: unknown target set");
}

Matrix element_unitary(const PulseElement& e) {
  switch (e.kind) {
    case PulseElement::Kind::rf_pulse:
      return rf_unitary(e);
    case PulseElement::Kind::j_delay:
      return delay_unitary(e.delay_multiple);
    case PulseElement::Kind::crusher:
      throw std::invalid_argument("crusher elements have no unitary");
  }
  throw std::invalid_argument("unknown pulse element kind");
}

Matrix zero_off_diagonals(const Matrix& m) {
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  out.diagonal() = m.diagonal();
  return out;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

const char* axis_token(qcore::Axis axis) {
  switch (axis) {
    case qcore::Axis::x:
      return "x";
    case qcore::Axis::y:
      return "y";
    case qcore::Axis::minus_x:
      return "-x";
    case qcore::Axis::minus_y:
      return "-y";
    case qcore::Axis::z:
      break;
  }
  throw std::invalid_argument("rf pulse: z is not a serializable phase axis");
}

const char* target_token(SpinTargets targets) {
  switch (targets) {
    case SpinTargets::spin1:
      return "1";
    case SpinTargets::spin2:
      return "2";
    case SpinTargets::both:
      return "12";
  }
  throw std::invalid_argument("rf pulse: unknown target set");
}

void check_theta(double theta) {
  if (!(theta > 0.0 && theta < pi)) {
    throw std::invalid_argument("theta must lie in (0, pi)");
  }
}

void check_phi(double phi) {
  if (!(phi > 0.0 && phi < two_pi)) {
    throw std::invalid_argument("phi must lie in (0, 2*pi)");
  }
}

}  // namespace

SpinSystem::SpinSystem(double j_coupling_hz, double larmor_1_hz, double larmor_2_hz)
    : j_coupling_(j_coupling_hz), larmor_1_(larmor_1_hz), larmor_2_(larmor_2_hz) {
  if (!(j_coupling_ > 0.0)) {
    throw std::invalid_argument("SpinSystem: j_coupling must be positive");
  }
}

PulseElement PulseElement::rf(SpinTargets targets, double flip_angle,
                              qcore::Axis axis) {
  if (!(flip_angle > 0.0 && flip_angle <= two_pi)) {
    throw std::invalid_argument("rf pulse: flip angle must lie in (0, 2*pi]");
  }
  if (axis == qcore::Axis::z) {
    throw std::invalid_argument(
        "rf pulse: only transverse phase axes are available; use composite_z");
  }
  PulseElement e;
  e.kind = Kind::rf_pulse;
  e.flip_angle = flip_angle;
  e.axis = axis;
  e.targets = targets;
  return e;
}

PulseElement PulseElement::delay(double multiple_of_inv_j) {
  if (!(multiple_of_inv_j >= 0.0)) {
    throw std::invalid_argument("delay: duration must be >= 0");
  }
  PulseElement e;
  e.kind = Kind::j_delay;
  e.delay_multiple = multiple_of_inv_j;
  return e;
}

PulseElement PulseElement::crush() {
  PulseElement e;
  e.kind = Kind::crusher;
  return e;
}

PulseSequence::PulseSequence(std::vector<PulseElement> elements)
    : elements_(std::move(elements)) {}

void PulseSequence::append(PulseElement element) {
  elements_.push_back(element);
}

void PulseSequence::append(const PulseSequence& tail) {
  elements_.insert(elements_.end(), tail.elements_.begin(), tail.elements_.end());
}

bool PulseSequence::has_crusher() const {
  for (const auto& e : elements_) {
    if (e.kind == PulseElement::Kind::crusher) {
      return true;
    }
  }
  return false;
}

qcore::UnitaryOperator PulseSequence::compile() const {
  if (has_crusher()) {
    throw std::invalid_argument(
        "PulseSequence::compile: crusher elements are not unitary");
  }
  Matrix u = Matrix::Identity(4, 4);
  for (const auto& e : elements_) {
    u = element_unitary(e) * u;
  }
  return qcore::UnitaryOperator(std::move(u));
}

void PulseSequence::serialize(std::ostream& out) const {
  for (const auto& e : elements_) {
    switch (e.kind) {
      case PulseElement::Kind::rf_pulse:
        out << "RF " << target_token(e.targets) << ' '
            << format_number(e.flip_angle * 180.0 / pi) << ' ' << axis_token(e.axis)
            << '\n';
        break;
      case PulseElement::Kind::j_delay:
        out << "DELAY " << format_number(e.delay_multiple) << '\n';
        break;
      case PulseElement::Kind::crusher:
        out << "CRUSH\n";
        break;
    }
  }
}

EquilibriumState::EquilibriumState(double gamma_ratio) : gamma_ratio_(gamma_ratio) {
  if (!(gamma_ratio_ > 0.0)) {
    throw std::invalid_argument("EquilibriumState: gamma_ratio must be positive");
  }
  deviation_ = Matrix::Zero(4, 4);
  const std::array<double, 4> z1 = {0.5, 0.5, -0.5, -0.5};
  const std::array<double, 4> z2 = {0.5, -0.5, 0.5, -0.5};
  for (Eigen::Index k = 0; k < 4; ++k) {
    deviation_(k, k) = z1[std::size_t(k)] + gamma_ratio_ * z2[std::size_t(k)];
  }
}

qcore::DensityMatrix pps_00() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  return qcore::DensityMatrix(std::move(m));
}

qcore::StateVector prepare_superposition(double theta) {
  check_theta(theta);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Vector v(4);
  v << c * c, s * c, s * c, s * s;
  return qcore::StateVector(std::move(v));
}

PulseSequence composite_z(double half_angle, Sign sign, SpinTargets target) {
  if (!(half_angle > 0.0 && half_angle < two_pi)) {
    throw std::invalid_argument("composite_z: half_angle must lie in (0, 2*pi)");
  }
  if (target == SpinTargets::both) {
    throw std::invalid_argument("composite_z: acts on a single spin");
  }
  const qcore::Axis center =
      sign == Sign::plus ? qcore::Axis::minus_x : qcore::Axis::x;
  PulseSequence seq;
  seq.append(PulseElement::rf(target, pi / 2.0, qcore::Axis::y));
  seq.append(PulseElement::rf(target, half_angle, center));
  seq.append(PulseElement::rf(target, pi / 2.0, qcore::Axis::minus_y));
  return seq;
}

qcore::UnitaryOperator j_evolution(const SpinSystem& system, double duration_seconds) {
  if (!(duration_seconds >= 0.0)) {
    throw std::invalid_argument("j_evolution: duration must be >= 0");
  }
  return qcore::UnitaryOperator(delay_unitary(system.j_coupling() * duration_seconds));
}

PulseSequence compile_i00(double phi) {
  check_phi(phi);
  PulseSequence seq;
  seq.append(composite_z(phi / 2.0, Sign::plus, SpinTargets::spin1));
  seq.append(composite_z(phi / 2.0, Sign::plus, SpinTargets::spin2));
  seq.append(PulseElement::delay(phi / two_pi));
  return seq;
}

PulseSequence compile_i00_inverse(double phi) {
  check_phi(phi);
  PulseSequence seq;
  seq.append(PulseElement::delay((4.0 * pi - phi) / two_pi));
  seq.append(composite_z(phi / 2.0, Sign::minus, SpinTargets::spin2));
  seq.append(composite_z(phi / 2.0, Sign::minus, SpinTargets::spin1));
  return seq;
}

PulseSequence compile_i11() {
  PulseSequence seq;
  seq.append(composite_z(pi / 2.0, Sign::minus, SpinTargets::spin1));
  seq.append(composite_z(pi / 2.0, Sign::minus, SpinTargets::spin2));
  seq.append(PulseElement::delay(0.5));
  return seq;
}

qcore::DensityMatrix crusher(const qcore::DensityMatrix& rho) {
  return qcore::DensityMatrix(zero_off_diagonals(rho.matrix()));
}

std::array<double, 4> measure_populations(const qcore::DensityMatrix& rho) {
  if (rho.dimension() != 4) {
    throw std::invalid_argument("measure_populations: two-spin density matrix required");
  }
  return {rho.population(0), rho.population(1), rho.population(2), rho.population(3)};
}

qcore::DensityMatrix run_sequence(const PulseSequence& seq,
                                  const qcore::DensityMatrix& rho0) {
  if (rho0.dimension() != 4) {
    throw std::invalid_argument("run_sequence: two-spin density matrix required");
  }
  Matrix rho = rho0.matrix();
  for (const auto& e : seq.elements()) {
    if (e.kind == PulseElement::Kind::crusher) {
      rho = zero_off_diagonals(rho);
    } else {
      const Matrix u = element_unitary(e);
      rho = u * rho * u.adjoint();
    }
  }
  return qcore::DensityMatrix(std::move(rho));
}

PulseSequence preparation_sequence(double theta) {
  check_theta(theta);
  PulseSequence seq;
  seq.append(PulseElement::rf(SpinTargets::both, theta, qcore::Axis::y));
  return seq;
}

PulseSequence grover_iteration_sequence(double theta, double phi) {
  check_theta(theta);
  check_phi(phi);
  PulseSequence seq;
  seq.append(compile_i11());
  seq.append(PulseElement::rf(SpinTargets::both, theta, qcore::Axis::minus_y));
  seq.append(compile_i00(phi));
  seq.append(PulseElement::rf(SpinTargets::both, theta, qcore::Axis::y));
  return seq;
}

PulseSequence modified_iteration_sequence(double theta, double phi) {
  check_theta(theta);
  check_phi(phi);
  PulseSequence seq;
  seq.append(compile_i11());
  seq.append(PulseElement::rf(SpinTargets::both, theta, qcore::Axis::minus_y));
  seq.append(compile_i00(phi));
  seq.append(PulseElement::rf(SpinTargets::both, theta, qcore::Axis::y));
  seq.append(compile_i11());
  seq.append(PulseElement::rf(SpinTargets::both, theta, qcore::Axis::minus_y));
  seq.append(compile_i00_inverse(phi));
  seq.append(PulseElement::rf(SpinTargets::both, theta, qcore::Axis::y));
  return seq;
}

}  // namespace qsearch::nmr

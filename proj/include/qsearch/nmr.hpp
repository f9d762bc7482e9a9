#pragma once

#include "qsearch/qcore.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace qsearch::nmr {

/// Two-spin system parameters. Spin 1 is the high-order qubit. Larmor
/// frequencies are recorded for completeness only: chemical-shift evolution
/// is refocused in every delay, so the dynamics here depend on J alone.
class SpinSystem {
 public:
  explicit SpinSystem(double j_coupling_hz = 209.0, double larmor_1_hz = 500.0e6,
                      double larmor_2_hz = 125.0e6);

  double j_coupling() const { return j_coupling_; }
  double larmor_1() const { return larmor_1_; }
  double larmor_2() const { return larmor_2_; }

 private:
  double j_coupling_;
  double larmor_1_;
  double larmor_2_;
};

enum class SpinTargets { spin1, spin2, both };
enum class Sign { plus, minus };

/// One step of a pulse program. Elements are listed in the order they are
/// applied; delays are stored as multiples of 1/J so a sequence is
/// independent of the absolute coupling strength.
struct PulseElement {
  enum class Kind { rf_pulse, j_delay, crusher };

  Kind kind = Kind::rf_pulse;
  double flip_angle = 0.0;               // radians, (0, 2*pi]; rf only
  qcore::Axis axis = qcore::Axis::x;     // transverse axes only; rf only
  SpinTargets targets = SpinTargets::both;  // rf only
  double delay_multiple = 0.0;           // units of 1/J; j_delay only

  static PulseElement rf(SpinTargets targets, double flip_angle, qcore::Axis axis);
  static PulseElement delay(double multiple_of_inv_j);
  static PulseElement crush();
};

/// Ordered pulse program. compile() folds the elements (first element acts
/// first) into a single 4x4 unitary; crusher elements are not unitary and
/// are rejected there, but run_sequence handles them.
class PulseSequence {
 public:
  PulseSequence() = default;
  explicit PulseSequence(std::vector<PulseElement> elements);

  void append(PulseElement element);
  void append(const PulseSequence& tail);

  const std::vector<PulseElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool has_crusher() const;

  qcore::UnitaryOperator compile() const;

  /// Line-oriented text form: `RF <target> <flip_deg> <axis>`,
  /// `DELAY <multiple_of_1_over_J>`, `CRUSH`. Numbers use 6 significant
  /// digits.
  void serialize(std::ostream& out) const;

 private:
  std::vector<PulseElement> elements_;
};

/// Thermal-equilibrium deviation density operator, diag and traceless:
/// I_z^1 + gamma_ratio * I_z^2 in units of the spin-1 gyromagnetic factor.
/// Provided for population-scale context; algorithm runs start from pps_00.
class EquilibriumState {
 public:
  explicit EquilibriumState(double gamma_ratio = 0.25);

  double gamma_ratio() const { return gamma_ratio_; }
  const Matrix& deviation() const { return deviation_; }

 private:
  double gamma_ratio_;
  Matrix deviation_;
};

/// Ideal |00> pseudo-pure state: unit population in |00>, zero elsewhere.
qcore::DensityMatrix pps_00();

/// State after a theta_y pulse on both spins of |00>:
/// (cos^2, sin*cos, sin*cos, sin^2) of theta/2. The overlap with |11> is
/// sin^2(theta/2).
qcore::StateVector prepare_superposition(double theta);

/// Composite z rotation [pi/2]_y [half_angle]_{-x} [pi/2]_{-y} on one spin.
/// Sign::plus compiles to exp(+i*half_angle*I_z); Sign::minus flips the
/// center pulse phase by pi and compiles to the adjoint.
PulseSequence composite_z(double half_angle, Sign sign, SpinTargets target);

/// Free evolution under the scalar coupling: exp(i*2*pi*J*t*I_z^1*I_z^2).
qcore::UnitaryOperator j_evolution(const SpinSystem& system, double duration_seconds);

/// Selective phase rotation of |00> by phi: composite z on each spin plus a
/// J delay of phi/(2*pi*J). Compiles to diag(e^{i phi},1,1,1) up to global
/// phase.
PulseSequence compile_i00(double phi);

/// Inverse of compile_i00(phi): center pulse phases flipped by pi, block
/// order reversed, delay stretched to (4*pi - phi)/(2*pi*J).
PulseSequence compile_i00_inverse(double phi);

/// Selective phase inversion of |11>: same structure as compile_i00 with
/// the center pulse phase flipped, flip angle pi/2, delay 1/(2J). Compiles
/// to diag(1,1,1,-1) up to global phase.
PulseSequence compile_i11();

/// Gradient crusher: zeroes every off-diagonal element, diagonal untouched.
qcore::DensityMatrix crusher(const qcore::DensityMatrix& rho);

/// Diagonal of a two-spin density matrix: populations (p00, p01, p10, p11).
std::array<double, 4> measure_populations(const qcore::DensityMatrix& rho);

/// Folds elements onto rho0 in listed order; rf/delay elements conjugate by
/// their unitaries, crushers zero the off-diagonals.
qcore::DensityMatrix run_sequence(const PulseSequence& seq,
                                  const qcore::DensityMatrix& rho0);

/// theta_y preparation pulse on both spins.
PulseSequence preparation_sequence(double theta);

/// One original-search step G = I_s^phi * I_t^pi as pulses, for
/// |s> = theta_y|00>, |t> = |11>.
PulseSequence grover_iteration_sequence(double theta, double phi);

/// One modified-search step I_s^{-phi} I_t^pi I_s^{phi} I_t^pi as pulses.
/// The target-phase gate carries no injected error, so its inverse is the
/// same I_11 block.
PulseSequence modified_iteration_sequence(double theta, double phi);

}  // namespace qsearch::nmr

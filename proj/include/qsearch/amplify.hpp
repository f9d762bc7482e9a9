#pragma once

#include "qsearch/qcore.hpp"

#include <vector>

namespace qsearch::amplify {

enum class Algorithm { original, modified };

/// A search instance: source state |s>, marked basis state |t>, and the
/// phases actually realized by the apparatus for the two selective
/// rotations (phi on I_s, varphi on I_t).
class SearchProblem {
 public:
  SearchProblem(qcore::StateVector source, Eigen::Index target, double phi,
                double varphi);

  const qcore::StateVector& source() const { return source_; }
  Eigen::Index target() const { return target_; }
  double phi() const { return phi_; }
  double varphi() const { return varphi_; }
  /// |<t|s>|
  double alpha() const { return alpha_; }
  Eigen::Index dimension() const { return source_.dimension(); }

 private:
  qcore::StateVector source_;
  Eigen::Index target_;
  double phi_;
  double varphi_;
  double alpha_;
};

/// 1 - (1 - e^{i omega}) |psi><psi|
qcore::UnitaryOperator selective_phase(const qcore::StateVector& psi, double omega);

/// I_s^phi * I_t^varphi. In operator products the rightmost factor acts
/// first on the state.
qcore::UnitaryOperator grover_operator(const SearchProblem& p);

/// I_s^{-phi} * I_t^{-varphi} * I_s^{phi} * I_t^{varphi}; cancels
/// reproducible, reversible phase errors. Equals two Grover steps when
/// phi = varphi = pi.
qcore::UnitaryOperator modified_operator(const SearchProblem& p);

/// pi / (4 * alpha * sin(phi/2) * sin(varphi/2)) — the number of modified
/// iterations that brings the marked state near probability 1.
double predicted_iterations(double alpha, double phi, double varphi);

/// |phi - varphi| <= c * alpha
bool phase_matching_satisfied(double phi, double varphi, double alpha, double c = 1.0);

/// Equal superposition of all 2^n basis states.
qcore::StateVector uniform_state(int qubit_count);

struct SchedulePoint {
  int iteration;
  double target_probability;
};

/// Entry q holds |<t| O^q |s>|^2 with O = G (original) or the modified
/// operator; entry 0 is the initial overlap probability alpha^2.
std::vector<SchedulePoint> iterate_schedule(const SearchProblem& p,
                                            Algorithm algorithm, int steps);

/// Exact restriction of the dynamics to span{|t>, |s_perp>}. Both search
/// operators preserve that plane, so two amplitudes carry the whole run.
class TwoLevelModel {
 public:
  /// Initial state (alpha, sqrt(1 - alpha^2)) over {|t>, |s_perp>}.
  TwoLevelModel(double alpha, double phi, double varphi);

  double alpha() const { return alpha_; }
  double phi() const { return phi_; }
  double varphi() const { return varphi_; }
  Complex target_amplitude() const { return state_(0); }
  Complex residual_amplitude() const { return state_(1); }
  double target_probability() const { return std::norm(state_(0)); }

 private:
  TwoLevelModel(double alpha, double phi, double varphi, Eigen::Vector2cd state);

  double alpha_;
  double phi_;
  double varphi_;
  Eigen::Vector2cd state_;

  friend TwoLevelModel two_level_step(const TwoLevelModel&, Algorithm);
};

/// The 2x2 matrix of G or the modified operator in the {|t>, |s_perp>} basis.
Eigen::Matrix2cd two_level_operator(double alpha, double phi, double varphi,
                                    Algorithm algorithm);

TwoLevelModel two_level_step(const TwoLevelModel& m, Algorithm algorithm);

/// Convenience: target probabilities for 0..steps applications.
std::vector<SchedulePoint> two_level_schedule(TwoLevelModel m, Algorithm algorithm,
                                              int steps);

}  // namespace qsearch::amplify

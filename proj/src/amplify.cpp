#include "qsearch/amplify.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace qsearch::amplify {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_phase_range(double value, const char* name) {
  if (!(value > 0.0 && value < two_pi)) {
    throw std::invalid_argument(std::string(name) + " must lie in (0, 2*pi)");
  }
}

Eigen::Matrix2cd two_level_selective_source(double alpha, double omega) {
  const Complex i(0.0, 1.0);
  Eigen::Vector2cd s(alpha, std::sqrt(1.0 - alpha * alpha));
  return Eigen::Matrix2cd::Identity() -
         (Complex(1.0) - std::exp(i * omega)) * (s * s.adjoint());
}

Eigen::Matrix2cd two_level_selective_target(double omega) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  m(0, 0) = std::exp(i * omega);
  return m;
}

}  // namespace

SearchProblem::SearchProblem(qcore::StateVector source, Eigen::Index target,
                             double phi, double varphi)
    : source_(std::move(source)), target_(target), phi_(phi), varphi_(varphi) {
  if (target_ < 0 || target_ >= source_.dimension()) {
    throw std::invalid_argument("SearchProblem: target index out of range");
  }
  check_phase_range(phi_, "SearchProblem: phi");
  check_phase_range(varphi_, "SearchProblem: varphi");
  alpha_ = std::abs(source_.amplitude(target_));
  if (!(alpha_ > 0.0 && alpha_ < 1.0)) {
    throw std::invalid_argument(
        "SearchProblem: |<t|s>| must lie strictly between 0 and 1");
  }
}

qcore::UnitaryOperator selective_phase(const qcore::StateVector& psi, double omega) {
  const Complex i(0.0, 1.0);
  const Vector& a = psi.amplitudes();
  Matrix m = Matrix::Identity(a.size(), a.size()) -
             (Complex(1.0) - std::exp(i * omega)) * (a * a.adjoint());
  return qcore::UnitaryOperator(std::move(m));
}

qcore::UnitaryOperator grover_operator(const SearchProblem& p) {
  const auto i_s = selective_phase(p.source(), p.phi());
  const auto i_t = selective_phase(
      qcore::StateVector::basis_state(p.dimension(), p.target()), p.varphi());
  return qcore::UnitaryOperator(i_s.matrix() * i_t.matrix());
}

qcore::UnitaryOperator modified_operator(const SearchProblem& p) {
  const auto t_state = qcore::StateVector::basis_state(p.dimension(), p.target());
  const Matrix i_s = selective_phase(p.source(), p.phi()).matrix();
  const Matrix i_s_inv = selective_phase(p.source(), -p.phi()).matrix();
  const Matrix i_t = selective_phase(t_state, p.varphi()).matrix();
  const Matrix i_t_inv = selective_phase(t_state, -p.varphi()).matrix();
  return qcore::UnitaryOperator(i_s_inv * i_t_inv * i_s * i_t);
}

double predicted_iterations(double alpha, double phi, double varphi) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("predicted_iterations: alpha must lie in (0, 1)");
  }
  const double s = std::sin(phi / 2.0) * std::sin(varphi / 2.0);
  if (std::abs(s) < 1e-15) {
    throw std::invalid_argument(
        "predicted_iterations: degenerate phases, sin(phi/2)*sin(varphi/2) = 0");
  }
  return std::numbers::pi / (4.0 * alpha * s);
}

bool phase_matching_satisfied(double phi, double varphi, double alpha, double c) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("phase_matching_satisfied: alpha must be positive");
  }
  if (!(c > 0.0)) {
    throw std::invalid_argument("phase_matching_satisfied: c must be positive");
  }
  return std::abs(phi - varphi) <= c * alpha;
}

qcore::StateVector uniform_state(int qubit_count) {
  if (qubit_count < 1) {
    throw std::invalid_argument("uniform_state: qubit count must be >= 1");
  }
  const Eigen::Index dim = Eigen::Index(1) << qubit_count;
  Vector v = Vector::Constant(dim, Complex(1.0 / std::sqrt(double(dim))));
  return qcore::StateVector(std::move(v));
}

std::vector<SchedulePoint> iterate_schedule(const SearchProblem& p,
                                            Algorithm algorithm, int steps) {
  if (steps < 1) {
    throw std::invalid_argument("iterate_schedule: steps must be >= 1");
  }
  const qcore::UnitaryOperator op =
      algorithm == Algorithm::original ? grover_operator(p) : modified_operator(p);
  std::vector<SchedulePoint> out;
  out.reserve(std::size_t(steps) + 1);
  qcore::StateVector state = p.source();
  out.push_back({0, state.probability(p.target())});
  for (int q = 1; q <= steps; ++q) {
    state = qcore::apply(op, state);
    out.push_back({q, state.probability(p.target())});
  }
  return out;
}

Eigen::Matrix2cd two_level_operator(double alpha, double phi, double varphi,
                                    Algorithm algorithm) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("two_level_operator: alpha must lie in (0, 1)");
  }
  const Eigen::Matrix2cd g = two_level_selective_source(alpha, phi) *
                             two_level_selective_target(varphi);
  if (algorithm == Algorithm::original) {
    return g;
  }
  return two_level_selective_source(alpha, -phi) *
         two_level_selective_target(-varphi) * g;
}

TwoLevelModel::TwoLevelModel(double alpha, double phi, double varphi)
    : alpha_(alpha), phi_(phi), varphi_(varphi) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("TwoLevelModel: alpha must lie strictly in (0, 1)");
  }
  state_ = Eigen::Vector2cd(alpha, std::sqrt(1.0 - alpha * alpha));
}

TwoLevelModel::TwoLevelModel(double alpha, double phi, double varphi,
                             Eigen::Vector2cd state)
    : alpha_(alpha), phi_(phi), varphi_(varphi), state_(std::move(state)) {
  const double norm_dev = std::abs(state_.norm() - 1.0);
  if (norm_dev > 1e-12) {
    throw invariant_error("TwoLevelModel: state norm drifted by " +
                          std::to_string(norm_dev));
  }
}

TwoLevelModel two_level_step(const TwoLevelModel& m, Algorithm algorithm) {
  const Eigen::Matrix2cd op =
      two_level_operator(m.alpha(), m.phi(), m.varphi(), algorithm);
  return TwoLevelModel(m.alpha(), m.phi(), m.varphi(), op * m.state_);
}

std::vector<SchedulePoint> two_level_schedule(TwoLevelModel m, Algorithm algorithm,
                                              int steps) {
  if (steps < 1) {
    throw std::invalid_argument("two_level_schedule: steps must be >= 1");
  }
  std::vector<SchedulePoint> out;
  out.reserve(std::size_t(steps) + 1);
  out.push_back({0, m.target_probability()});
  for (int q = 1; q <= steps; ++q) {
    m = two_level_step(m, algorithm);
    out.push_back({q, m.target_probability()});
  }
  return out;
}

}  // namespace qsearch::amplify

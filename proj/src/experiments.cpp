#include "qsearch/experiments.hpp"

#include "qsearch/nmr.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace qsearch::experiments {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr Eigen::Index target_index = 3;  // |11>

long oracle_calls_per_step(amplify::Algorithm a) {
  return a == amplify::Algorithm::original ? 1 : 2;
}

RunRow make_row(int iteration, amplify::Algorithm algorithm,
                const std::array<double, 4>& pops) {
  RunRow row;
  row.iteration = iteration;
  row.oracle_calls = iteration * oracle_calls_per_step(algorithm);
  row.p00 = pops[0];
  row.p01 = pops[1];
  row.p10 = pops[2];
  row.p11 = pops[3];
  row.p_target = pops[3];
  return row;
}

// Populations of a two-level state a_t|11> + a_p|s_perp>. When theta is
// known the residual direction has fixed weights (c^4, c^2 s^2, c^2 s^2)/b^2
// over |00>, |01>, |10>; without theta there is no four-state structure and
// the whole unmarked weight is reported in p00.
std::array<double, 4> two_level_populations(const amplify::TwoLevelModel& m,
                                            const std::optional<double>& theta) {
  const double pt = m.target_probability();
  const double pr = std::norm(m.residual_amplitude());
  if (!theta.has_value()) {
    return {pr, 0.0, 0.0, pt};
  }
  const double c2 = std::cos(*theta / 2.0) * std::cos(*theta / 2.0);
  const double s2 = std::sin(*theta / 2.0) * std::sin(*theta / 2.0);
  const double b2 = 1.0 - s2 * s2;  // ||s - alpha*t||^2
  return {pr * c2 * c2 / b2, pr * c2 * s2 / b2, pr * c2 * s2 / b2, pt};
}

RunRecord run_two_level(const ScenarioConfig& cfg, amplify::Algorithm algorithm) {
  RunRecord rec;
  rec.config = cfg;
  rec.algorithm = algorithm;
  amplify::TwoLevelModel model(cfg.effective_alpha(), cfg.phi, cfg.varphi);
  rec.rows.reserve(std::size_t(cfg.iterations) + 1);
  rec.rows.push_back(make_row(0, algorithm, two_level_populations(model, cfg.theta)));
  for (int q = 1; q <= cfg.iterations; ++q) {
    model = amplify::two_level_step(model, algorithm);
    rec.rows.push_back(make_row(q, algorithm, two_level_populations(model, cfg.theta)));
  }
  return rec;
}

std::array<double, 4> state_populations(const qcore::StateVector& s) {
  return {s.probability(0), s.probability(1), s.probability(2), s.probability(3)};
}

RunRecord run_state_vector(const ScenarioConfig& cfg, amplify::Algorithm algorithm) {
  RunRecord rec;
  rec.config = cfg;
  rec.algorithm = algorithm;
  qcore::StateVector state = nmr::prepare_superposition(*cfg.theta);
  const amplify::SearchProblem problem(state, target_index, cfg.phi, cfg.varphi);
  const qcore::UnitaryOperator op = algorithm == amplify::Algorithm::original
                                        ? amplify::grover_operator(problem)
                                        : amplify::modified_operator(problem);
  rec.rows.reserve(std::size_t(cfg.iterations) + 1);
  rec.rows.push_back(make_row(0, algorithm, state_populations(state)));
  for (int q = 1; q <= cfg.iterations; ++q) {
    state = qcore::apply(op, state);
    rec.rows.push_back(make_row(q, algorithm, state_populations(state)));
  }
  return rec;
}

RunRecord run_nmr_pulse(const ScenarioConfig& cfg, amplify::Algorithm algorithm) {
  RunRecord rec;
  rec.config = cfg;
  rec.algorithm = algorithm;
  const nmr::PulseSequence step =
      algorithm == amplify::Algorithm::original
          ? nmr::grover_iteration_sequence(*cfg.theta, cfg.phi)
          : nmr::modified_iteration_sequence(*cfg.theta, cfg.phi);
  qcore::DensityMatrix rho =
      nmr::run_sequence(nmr::preparation_sequence(*cfg.theta), nmr::pps_00());
  rec.rows.reserve(std::size_t(cfg.iterations) + 1);
  rec.rows.push_back(
      make_row(0, algorithm, nmr::measure_populations(nmr::crusher(rho))));
  for (int q = 1; q <= cfg.iterations; ++q) {
    rho = nmr::run_sequence(step, rho);
    rec.rows.push_back(
        make_row(q, algorithm, nmr::measure_populations(nmr::crusher(rho))));
  }
  return rec;
}

RunRecord run_single(const ScenarioConfig& cfg, amplify::Algorithm algorithm) {
  ScenarioConfig echoed = cfg;
  echoed.algorithm = algorithm == amplify::Algorithm::original
                         ? AlgorithmChoice::original
                         : AlgorithmChoice::modified;
  switch (cfg.backend) {
    case Backend::two_level:
      return run_two_level(echoed, algorithm);
    case Backend::state_vector:
      return run_state_vector(echoed, algorithm);
    case Backend::nmr_pulse:
      return run_nmr_pulse(echoed, algorithm);
  }
  throw std::invalid_argument("run_scenario: unknown backend");
}

int round_to_int(double value) { return int(std::llround(value)); }

nlohmann::json config_to_json(const ScenarioConfig& cfg) {
  nlohmann::json j;
  j["algorithm"] = to_string(cfg.algorithm);
  j["backend"] = to_string(cfg.backend);
  if (cfg.theta.has_value()) {
    j["theta"] = *cfg.theta;
  }
  if (cfg.alpha.has_value()) {
    j["alpha"] = *cfg.alpha;
  }
  j["phi"] = cfg.phi;
  j["varphi"] = cfg.varphi;
  j["iterations"] = cfg.iterations;
  j["format"] = to_string(cfg.output_format);
  return j;
}

AlgorithmChoice algorithm_choice_from_string(const std::string& s) {
  if (s == "original") return AlgorithmChoice::original;
  if (s == "modified") return AlgorithmChoice::modified;
  if (s == "both") return AlgorithmChoice::both;
  throw std::invalid_argument("unknown algorithm: " + s);
}

Backend backend_from_string(const std::string& s) {
  if (s == "two_level") return Backend::two_level;
  if (s == "state_vector") return Backend::state_vector;
  if (s == "nmr_pulse") return Backend::nmr_pulse;
  throw std::invalid_argument("unknown backend: " + s);
}

Format format_from_string(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + s);
}

ScenarioConfig config_from_json(const nlohmann::json& j) {
  ScenarioConfig cfg;
  cfg.algorithm = algorithm_choice_from_string(j.at("algorithm").get<std::string>());
  cfg.backend = backend_from_string(j.at("backend").get<std::string>());
  if (j.contains("theta")) {
    cfg.theta = j.at("theta").get<double>();
  }
  if (j.contains("alpha")) {
    cfg.alpha = j.at("alpha").get<double>();
  }
  cfg.phi = j.at("phi").get<double>();
  cfg.varphi = j.at("varphi").get<double>();
  cfg.iterations = j.at("iterations").get<int>();
  cfg.output_format = format_from_string(j.at("format").get<std::string>());
  return cfg;
}

nlohmann::json record_to_json(const RunRecord& r) {
  nlohmann::json j;
  j["config"] = config_to_json(r.config);
  j["algorithm"] = to_string(r.algorithm);
  j["peak_probability"] = r.peak_probability();
  j["argmax_iteration"] = r.argmax_iteration();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json o;
    o["iteration"] = row.iteration;
    o["oracle_calls"] = row.oracle_calls;
    o["p00"] = row.p00;
    o["p01"] = row.p01;
    o["p10"] = row.p10;
    o["p11"] = row.p11;
    o["p_target"] = row.p_target;
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  return j;
}

nlohmann::json report_to_json(const ComparisonReport& c) {
  nlohmann::json j;
  j["peak_a"] = c.peak_a;
  j["peak_b"] = c.peak_b;
  j["argmax_a"] = c.argmax_a;
  j["argmax_b"] = c.argmax_b;
  j["argmax_a_oracle_calls"] = c.argmax_a_oracle_calls;
  j["argmax_b_oracle_calls"] = c.argmax_b_oracle_calls;
  j["probability_delta"] = c.probability_delta;
  j["phase_matching"] = c.phase_matching;
  j["verdict"] = c.verdict;
  return j;
}

}  // namespace

void ScenarioConfig::validate() const {
  if (iterations < 1) {
    throw std::invalid_argument("config: iterations must be >= 1");
  }
  if (theta.has_value() == alpha.has_value()) {
    throw std::invalid_argument("config: exactly one of theta/alpha must be given");
  }
  if (theta.has_value() && !(*theta > 0.0 && *theta < pi)) {
    throw std::invalid_argument("config: theta must lie in (0, pi)");
  }
  if (alpha.has_value() && !(*alpha > 0.0 && *alpha < 1.0)) {
    throw std::invalid_argument("config: alpha must lie in (0, 1)");
  }
  if (!(phi > 0.0 && phi < two_pi) || !(varphi > 0.0 && varphi < two_pi)) {
    throw std::invalid_argument("config: phi and varphi must lie in (0, 2*pi)");
  }
  if (alpha.has_value() && backend != Backend::two_level) {
    throw std::invalid_argument(
        "config: alpha is only meaningful for the two_level backend");
  }
  if (backend == Backend::nmr_pulse && std::abs(varphi - pi) > 1e-12) {
    throw std::invalid_argument(
        "config: the pulse backend realizes the target-phase gate at varphi = pi only");
  }
}

double ScenarioConfig::effective_alpha() const {
  if (alpha.has_value()) {
    return *alpha;
  }
  if (!theta.has_value()) {
    throw std::invalid_argument("config: neither theta nor alpha is set");
  }
  const double s = std::sin(*theta / 2.0);
  return s * s;
}

double RunRecord::peak_probability() const {
  double best = 0.0;
  for (const auto& row : rows) {
    best = std::max(best, row.p_target);
  }
  return best;
}

int RunRecord::argmax_iteration() const {
  int arg = 0;
  double best = -1.0;
  for (const auto& row : rows) {
    if (row.p_target > best) {
      best = row.p_target;
      arg = row.iteration;
    }
  }
  return arg;
}

bool operator==(const RunRecord& a, const RunRecord& b) {
  return a.algorithm == b.algorithm && a.rows == b.rows &&
         a.config.algorithm == b.config.algorithm &&
         a.config.backend == b.config.backend && a.config.theta == b.config.theta &&
         a.config.alpha == b.config.alpha && a.config.phi == b.config.phi &&
         a.config.varphi == b.config.varphi &&
         a.config.iterations == b.config.iterations &&
         a.config.output_format == b.config.output_format;
}

std::vector<RunRecord> run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  std::vector<RunRecord> out;
  if (cfg.algorithm == AlgorithmChoice::original ||
      cfg.algorithm == AlgorithmChoice::both) {
    out.push_back(run_single(cfg, amplify::Algorithm::original));
  }
  if (cfg.algorithm == AlgorithmChoice::modified ||
      cfg.algorithm == AlgorithmChoice::both) {
    out.push_back(run_single(cfg, amplify::Algorithm::modified));
  }
  return out;
}

ScenarioConfig preset(const std::string& name) {
  ScenarioConfig cfg;
  cfg.algorithm = AlgorithmChoice::both;
  if (name == "fig1a") {
    cfg.backend = Backend::two_level;
    cfg.alpha = 0.00091;
    cfg.phi = pi;
    cfg.varphi = 0.9 * pi;
    cfg.iterations =
        round_to_int(2.0 * amplify::predicted_iterations(*cfg.alpha, cfg.phi, cfg.varphi));
    return cfg;
  }
  if (name == "fig1b") {
    cfg.backend = Backend::two_level;
    cfg.alpha = 0.00091;
    cfg.phi = 0.9 * pi;
    cfg.varphi = 0.9 * pi;
    cfg.iterations =
        round_to_int(2.0 * amplify::predicted_iterations(*cfg.alpha, cfg.phi, cfg.varphi));
    return cfg;
  }
  if (name == "fig3a") {
    cfg.backend = Backend::state_vector;
    cfg.theta = pi / 4.0;
    cfg.phi = pi;
    cfg.varphi = pi;
    cfg.iterations = 14;
    return cfg;
  }
  if (name == "fig3b") {
    cfg.backend = Backend::state_vector;
    cfg.theta = pi / 6.0;
    cfg.phi = 0.9 * pi;
    cfg.varphi = pi;
    cfg.iterations = 14;
    return cfg;
  }
  if (name == "fig3c") {
    cfg.backend = Backend::state_vector;
    cfg.theta = pi / 9.0;
    cfg.phi = 0.9 * pi;
    cfg.varphi = pi;
    cfg.iterations = 14;
    return cfg;
  }
  throw std::invalid_argument("unknown preset: " + name);
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig1a", "fig1b", "fig3a", "fig3b",
                                                 "fig3c"};
  return names;
}

ComparisonReport compare_report(const RunRecord& a, const RunRecord& b) {
  if (a.rows.size() != b.rows.size()) {
    throw std::invalid_argument("compare_report: records differ in iteration count");
  }
  ComparisonReport c;
  c.peak_a = a.peak_probability();
  c.peak_b = b.peak_probability();
  c.argmax_a = a.argmax_iteration();
  c.argmax_b = b.argmax_iteration();
  c.argmax_a_oracle_calls = c.argmax_a * oracle_calls_per_step(a.algorithm);
  c.argmax_b_oracle_calls = c.argmax_b * oracle_calls_per_step(b.algorithm);
  c.probability_delta.reserve(a.rows.size());
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    c.probability_delta.push_back(a.rows[k].p_target - b.rows[k].p_target);
  }
  c.phase_matching = amplify::phase_matching_satisfied(
      a.config.phi, a.config.varphi, a.config.effective_alpha());
  c.verdict = c.phase_matching ? "phase matching satisfied" : "phase matching violated";
  return c;
}

void emit_csv(const RunRecord& record, std::ostream& out) {
  out << "iteration,oracle_calls,p00,p01,p10,p11,p_target\n";
  char buf[160];
  for (const auto& row : record.rows) {
    std::snprintf(buf, sizeof(buf), "%d,%ld,%.9f,%.9f,%.9f,%.9f,%.9f\n",
                  row.iteration, row.oracle_calls, row.p00, row.p01, row.p10,
                  row.p11, row.p_target);
    out << buf;
  }
}

void emit(const RunRecord& record, Format format, std::ostream& out) {
  if (format == Format::csv) {
    emit_csv(record, out);
  } else {
    out << to_json_string(record) << '\n';
  }
}

std::string to_json_string(const RunRecord& record) {
  return record_to_json(record).dump(2);
}

std::string to_json_string(const ComparisonReport& report) {
  return report_to_json(report).dump(2);
}

std::string to_json_string(const std::vector<RunRecord>& records) {
  if (records.size() == 1) {
    return to_json_string(records.front());
  }
  if (records.size() == 2) {
    nlohmann::json j;
    j["original"] = record_to_json(records[0]);
    j["modified"] = record_to_json(records[1]);
    j["comparison"] = report_to_json(compare_report(records[0], records[1]));
    return j.dump(2);
  }
  throw std::invalid_argument("to_json_string: expected one or two records");
}

RunRecord run_record_from_json_string(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  RunRecord r;
  r.config = config_from_json(j.at("config"));
  const std::string alg = j.at("algorithm").get<std::string>();
  if (alg == "original") {
    r.algorithm = amplify::Algorithm::original;
  } else if (alg == "modified") {
    r.algorithm = amplify::Algorithm::modified;
  } else {
    throw std::invalid_argument("record: unknown algorithm " + alg);
  }
  for (const auto& o : j.at("rows")) {
    RunRow row;
    row.iteration = o.at("iteration").get<int>();
    row.oracle_calls = o.at("oracle_calls").get<long>();
    row.p00 = o.at("p00").get<double>();
    row.p01 = o.at("p01").get<double>();
    row.p10 = o.at("p10").get<double>();
    row.p11 = o.at("p11").get<double>();
    row.p_target = o.at("p_target").get<double>();
    r.rows.push_back(row);
  }
  return r;
}

std::string to_string(AlgorithmChoice a) {
  switch (a) {
    case AlgorithmChoice::original:
      return "original";
    case AlgorithmChoice::modified:
      return "modified";
    case AlgorithmChoice::both:
      return "both";
  }
  return "unknown";
}

std::string to_string(Backend b) {
  switch (b) {
    case Backend::two_level:
      return "two_level";
    case Backend::state_vector:
      return "state_vector";
    case Backend::nmr_pulse:
      return "nmr_pulse";
  }
  return "unknown";
}

std::string to_string(Format f) {
  return f == Format::csv ? "csv" : "json";
}

std::string to_string(amplify::Algorithm a) {
  return a == amplify::Algorithm::original ? "original" : "modified";
}

}  // namespace qsearch::experiments

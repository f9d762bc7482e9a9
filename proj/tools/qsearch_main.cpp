#include "qsearch/experiments.hpp"
#include "qsearch/nmr.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

namespace {

constexpr double pi = std::numbers::pi;

// Accepts plain reals and literal pi arithmetic: "pi", "0.9pi", "pi/9",
// "2pi/3".
double parse_angle(const std::string& raw) {
  const std::string text = raw;
  const auto parse_real = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad numeric literal: '" + raw + "'");
    }
    if (used != s.size()) {
      throw std::invalid_argument("bad numeric literal: '" + raw + "'");
    }
    return v;
  };
  const std::size_t p = text.find("pi");
  if (p == std::string::npos) {
    return parse_real(text);
  }
  const std::string prefix = text.substr(0, p);
  const std::string suffix = text.substr(p + 2);
  double coef = 1.0;
  if (prefix == "-") {
    coef = -1.0;
  } else if (!prefix.empty()) {
    coef = parse_real(prefix);
  }
  double divisor = 1.0;
  if (!suffix.empty()) {
    if (suffix.front() != '/' || suffix.size() < 2) {
      throw std::invalid_argument("bad angle literal: '" + raw + "'");
    }
    divisor = parse_real(suffix.substr(1));
  }
  return coef * pi / divisor;
}

void dump_sequences(const qsearch::experiments::ScenarioConfig& cfg,
                    std::ostream& out) {
  using namespace qsearch;
  out << "# i00 phi=" << cfg.phi << "\n";
  nmr::compile_i00(cfg.phi).serialize(out);
  out << "# i00_inverse\n";
  nmr::compile_i00_inverse(cfg.phi).serialize(out);
  out << "# i11\n";
  nmr::compile_i11().serialize(out);
  if (cfg.theta.has_value()) {
    out << "# preparation theta=" << *cfg.theta << "\n";
    nmr::preparation_sequence(*cfg.theta).serialize(out);
    out << "# original_iteration\n";
    nmr::grover_iteration_sequence(*cfg.theta, cfg.phi).serialize(out);
    out << "# modified_iteration\n";
    nmr::modified_iteration_sequence(*cfg.theta, cfg.phi).serialize(out);
  }
}

int run(int argc, char** argv) {
  using namespace qsearch::experiments;

  CLI::App app{"Search-amplification simulator: original and modified "
               "(error-cancelling) iterations over three backends"};

  std::string scenario;
  std::string theta_text;
  std::string alpha_text;
  std::string phi_text = "pi";
  std::string varphi_text = "pi";
  int iterations = 14;
  std::string algorithm_text = "both";
  std::string backend_text = "state_vector";
  std::string format_text = "csv";
  std::string output = "stdout";
  bool dump_sequence = false;

  auto* scenario_opt =
      app.add_option("--scenario", scenario,
                     "preset name: fig1a, fig1b, fig3a, fig3b, fig3c");
  auto* theta_opt = app.add_option(
      "--theta", theta_text, "preparation angle in radians (accepts pi literals)");
  auto* alpha_opt =
      app.add_option("--alpha", alpha_text, "direct overlap, two_level backend only");
  auto* phi_opt = app.add_option("--phi", phi_text, "phase realized on I_s");
  auto* varphi_opt = app.add_option("--varphi", varphi_text, "phase realized on I_t");
  auto* iter_opt = app.add_option("--iterations", iterations, "operator applications");
  auto* alg_opt = app.add_option("--algorithm", algorithm_text,
                                 "original | modified | both");
  auto* backend_opt = app.add_option("--backend", backend_text,
                                     "two_level | state_vector | nmr_pulse");
  app.add_option("--format", format_text, "csv | json");
  app.add_option("--output", output, "file path or 'stdout'");
  app.add_flag("--dump-sequence", dump_sequence,
               "print the compiled pulse sequences for phi and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool explicit_params = theta_opt->count() > 0 || alpha_opt->count() > 0 ||
                               phi_opt->count() > 0 || varphi_opt->count() > 0 ||
                               iter_opt->count() > 0 || alg_opt->count() > 0 ||
                               backend_opt->count() > 0;

  ScenarioConfig cfg;
  if (scenario_opt->count() > 0) {
    if (explicit_params) {
      throw std::invalid_argument(
          "--scenario cannot be combined with explicit parameter flags");
    }
    cfg = preset(scenario);
  } else {
    if (theta_opt->count() > 0) {
      cfg.theta = parse_angle(theta_text);
    }
    if (alpha_opt->count() > 0) {
      cfg.alpha = parse_angle(alpha_text);
    }
    cfg.phi = parse_angle(phi_text);
    cfg.varphi = parse_angle(varphi_text);
    cfg.iterations = iterations;
    cfg.algorithm = [&] {
      if (algorithm_text == "original") return AlgorithmChoice::original;
      if (algorithm_text == "modified") return AlgorithmChoice::modified;
      if (algorithm_text == "both") return AlgorithmChoice::both;
      throw std::invalid_argument("unknown algorithm: " + algorithm_text);
    }();
    cfg.backend = [&] {
      if (backend_text == "two_level") return Backend::two_level;
      if (backend_text == "state_vector") return Backend::state_vector;
      if (backend_text == "nmr_pulse") return Backend::nmr_pulse;
      throw std::invalid_argument("unknown backend: " + backend_text);
    }();
  }
  cfg.output_format = [&] {
    if (format_text == "csv") return Format::csv;
    if (format_text == "json") return Format::json;
    throw std::invalid_argument("unknown format: " + format_text);
  }();

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (output != "stdout" && output != "-") {
    file.open(output);
    if (!file) {
      throw std::runtime_error("cannot open output file: " + output);
    }
    out = &file;
  }

  if (dump_sequence) {
    dump_sequences(cfg, *out);
    return 0;
  }

  const std::vector<RunRecord> records = run_scenario(cfg);
  if (cfg.output_format == Format::json) {
    *out << to_json_string(records) << '\n';
  } else {
    if (records.size() == 1) {
      emit_csv(records.front(), *out);
    } else {
      for (const auto& record : records) {
        *out << "# algorithm=" << to_string(record.algorithm) << '\n';
        emit_csv(record, *out);
      }
    }
  }
  if (out->fail()) {
    throw std::runtime_error("write failure on output sink");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qsearch::invariant_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

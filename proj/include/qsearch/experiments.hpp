#pragma once

#include "qsearch/amplify.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qsearch::experiments {

enum class AlgorithmChoice { original, modified, both };
enum class Backend { two_level, state_vector, nmr_pulse };
enum class Format { csv, json };

/// Declarative run description. Fully deterministic: no seeds, no clocks.
/// Exactly one of theta/alpha must be set; alpha (a direct overlap) is only
/// meaningful for the two_level backend, the two-qubit backends need theta.
struct ScenarioConfig {
  AlgorithmChoice algorithm = AlgorithmChoice::both;
  Backend backend = Backend::state_vector;
  std::optional<double> theta;  // radians, (0, pi)
  std::optional<double> alpha;  // (0, 1)
  double phi = 3.14159265358979323846;
  double varphi = 3.14159265358979323846;
  int iterations = 14;
  Format output_format = Format::csv;

  /// Throws std::invalid_argument on any bad field or combination.
  void validate() const;

  /// alpha if set, else sin^2(theta/2).
  double effective_alpha() const;
};

struct RunRow {
  int iteration = 0;
  long oracle_calls = 0;  // 1 per original step, 2 per modified step
  double p00 = 0.0;
  double p01 = 0.0;
  double p10 = 0.0;
  double p11 = 0.0;
  double p_target = 0.0;

  friend bool operator==(const RunRow&, const RunRow&) = default;
};

/// Per-iteration population table plus the configuration that produced it.
/// Row 0 holds the prepared state, row q the state after q applications of
/// the chosen operator.
struct RunRecord {
  ScenarioConfig config;  // algorithm resolved to this record's own
  amplify::Algorithm algorithm = amplify::Algorithm::original;
  std::vector<RunRow> rows;

  double peak_probability() const;
  int argmax_iteration() const;
};

bool operator==(const RunRecord& a, const RunRecord& b);

/// One record per requested algorithm (original first when both).
std::vector<RunRecord> run_scenario(const ScenarioConfig& cfg);

/// Bundled configurations: fig1a, fig1b (two-level runs at alpha = 0.00091),
/// fig3a, fig3b, fig3c (two-qubit state-vector runs, 14 iterations).
ScenarioConfig preset(const std::string& name);
const std::vector<std::string>& preset_names();

struct ComparisonReport {
  double peak_a = 0.0;
  double peak_b = 0.0;
  int argmax_a = 0;
  int argmax_b = 0;
  long argmax_a_oracle_calls = 0;
  long argmax_b_oracle_calls = 0;
  std::vector<double> probability_delta;  // p_target(a) - p_target(b) per row
  bool phase_matching = false;
  std::string verdict;  // "phase matching satisfied" / "phase matching violated"
};

/// Side-by-side summary; records must share an iteration count.
ComparisonReport compare_report(const RunRecord& a, const RunRecord& b);

/// CSV: header `iteration,oracle_calls,p00,p01,p10,p11,p_target`, 9 decimal
/// digits per value, byte-identical across repeated runs.
void emit_csv(const RunRecord& record, std::ostream& out);
void emit(const RunRecord& record, Format format, std::ostream& out);

std::string to_json_string(const RunRecord& record);
std::string to_json_string(const ComparisonReport& report);
/// Single record -> that record's object; pair -> {original, modified,
/// comparison}.
std::string to_json_string(const std::vector<RunRecord>& records);
RunRecord run_record_from_json_string(const std::string& text);

std::string to_string(AlgorithmChoice a);
std::string to_string(Backend b);
std::string to_string(Format f);
std::string to_string(amplify::Algorithm a);

}  // namespace qsearch::experiments

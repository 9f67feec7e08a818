#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace ncg::cli {

/// Flag/usage problems; the driver maps these to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n = 0;
  int s = 0;  // lemma-check block count; 0 means "same as n"
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int trials = 200;
  int jobs = 1;
  std::vector<std::string> group;
  std::vector<std::string> errors;
  std::string m0_path;
  std::string m0_inline;
  std::string output_path;
  bool human = false;
  bool timing = false;

  bool operator==(const RunConfig&) const = default;
};

/// Parses argv-style tokens (without the program name). Throws UsageError
/// naming the offending flag. NCGRAPH_TOL, when set, overrides the default
/// tolerance.
RunConfig parse_inputs(const std::vector<std::string>& args);

/// Rebuilds a config from the "inputs" object echoed in a report.
RunConfig config_from_inputs(const nlohmann::json& inputs);
nlohmann::json inputs_json(const RunConfig& config);

struct RunResult {
  nlohmann::json report;
  int exit_code = 0;  // 0 verdict true, 1 verdict false
};

/// Dispatches the command. Domain/input failures propagate as exceptions;
/// the driver reports them on exit code 2.
RunResult run(const RunConfig& config);

std::string render_human(const nlohmann::json& report);

}  // namespace ncg::cli

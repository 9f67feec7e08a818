#include "ncgraph/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ncgraph/clifford.hpp"
#include "ncgraph/ncgraph.hpp"
#include "ncgraph/pauli.hpp"
#include "ncgraph/report.hpp"
#include "ncgraph/spectral.hpp"
#include "ncgraph/stabilizer.hpp"
#include "ncgraph/version.hpp"

namespace ncg::cli {

namespace {

const char* kCommands[] = {"check-opsys",    "anticliques",  "kl-verify",
                           "stabilizer-span", "classical-check",
                           "canonicalize",   "lemma-check"};

bool known_command(const std::string& c) {
  for (const char* k : kCommands) {
    if (c == k) {
      return true;
    }
  }
  return false;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  for (const auto& tok : out) {
    if (tok.empty()) {
      throw UsageError("empty entry in list '" + text + "'");
    }
  }
  return out;
}

int parse_int(const std::string& flag, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) {
      throw std::invalid_argument("");
    }
    return v;
  } catch (const std::exception&) {
    throw UsageError(flag + " expects an integer, got '" + value + "'");
  }
}

double parse_double(const std::string& flag, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) {
      throw std::invalid_argument("");
    }
    return v;
  } catch (const std::exception&) {
    throw UsageError(flag + " expects a number, got '" + value + "'");
  }
}

// JSON array of Pauli strings, e.g. ["ZZI", "IZZ"].
std::vector<std::string> list_from_file(const std::string& flag,
                                        const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError(flag + ": cannot open '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(flag + ": bad JSON in '" + path + "': " + e.what());
  }
  if (!j.is_array() || j.empty()) {
    throw UsageError(flag + ": '" + path +
                     "' must hold a nonempty JSON array of strings");
  }
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw UsageError(flag + ": '" + path + "' entries must be strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

RunConfig parse_inputs(const std::vector<std::string>& args) {
  if (args.empty()) {
    throw UsageError(
        "missing command (one of check-opsys, anticliques, kl-verify, "
        "stabilizer-span, classical-check, canonicalize, lemma-check)");
  }
  RunConfig config;
  config.command = args[0];
  if (!known_command(config.command)) {
    throw UsageError("unknown command '" + config.command + "'");
  }
  if (const char* env = std::getenv("NCGRAPH_TOL")) {
    config.tol = parse_double("NCGRAPH_TOL", env);
  }

  bool have_n = false;
  std::string group_file, errors_file;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& flag = args[i];
    auto next = [&]() -> const std::string& {
      if (i + 1 >= args.size()) {
        throw UsageError(flag + " needs a value");
      }
      return args[++i];
    };
    if (flag == "--n") {
      config.n = parse_int(flag, next());
      have_n = true;
    } else if (flag == "--s") {
      config.s = parse_int(flag, next());
    } else if (flag == "--tol") {
      config.tol = parse_double(flag, next());
    } else if (flag == "--seed") {
      const std::string& value = next();
      try {
        std::size_t used = 0;
        config.seed = std::stoull(value, &used);
        if (used != value.size()) {
          throw std::invalid_argument("");
        }
      } catch (const std::exception&) {
        throw UsageError("--seed expects an unsigned integer, got '" + value +
                         "'");
      }
    } else if (flag == "--trials") {
      config.trials = parse_int(flag, next());
    } else if (flag == "--jobs") {
      config.jobs = parse_int(flag, next());
    } else if (flag == "--group") {
      config.group = split_list(next());
    } else if (flag == "--group-file") {
      group_file = next();
    } else if (flag == "--errors") {
      config.errors = split_list(next());
    } else if (flag == "--errors-file") {
      errors_file = next();
    } else if (flag == "--m0") {
      config.m0_path = next();
    } else if (flag == "--m0-coeffs") {
      config.m0_inline = next();
    } else if (flag == "--output") {
      config.output_path = next();
    } else if (flag == "--human") {
      config.human = true;
    } else if (flag == "--timing") {
      config.timing = true;
    } else {
      throw UsageError("unknown flag '" + flag + "'");
    }
  }

  if (!have_n) {
    throw UsageError("missing required --n");
  }
  if (config.n < 1) {
    throw UsageError("--n must be at least 1");
  }
  if (config.tol <= 0.0) {
    throw UsageError("--tol must be positive");
  }
  if (config.trials < 1) {
    throw UsageError("--trials must be positive");
  }
  if (config.jobs < 1) {
    throw UsageError("--jobs must be positive");
  }
  if (config.s == 0 && config.command == "lemma-check") {
    config.s = config.n;
  }
  if (config.s < 0 || config.s > config.n) {
    throw UsageError("--s must be in [1, n]");
  }

  if (!group_file.empty()) {
    if (!config.group.empty()) {
      throw UsageError("ambiguous group source: --group and --group-file");
    }
    config.group = list_from_file("--group-file", group_file);
  }
  if (!errors_file.empty()) {
    if (!config.errors.empty()) {
      throw UsageError("ambiguous errors source: --errors and --errors-file");
    }
    config.errors = list_from_file("--errors-file", errors_file);
  }

  const bool needs_group = config.command != "lemma-check";
  if (needs_group && config.group.empty()) {
    throw UsageError("missing required --group for " + config.command);
  }
  const bool needs_m0 =
      config.command == "check-opsys" || config.command == "anticliques";
  if (needs_m0) {
    if (config.m0_path.empty() && config.m0_inline.empty()) {
      throw UsageError("missing m0: give --m0 <file> or --m0-coeffs <json>");
    }
    if (!config.m0_path.empty() && !config.m0_inline.empty()) {
      throw UsageError("ambiguous m0 source: --m0 and --m0-coeffs both set");
    }
  }
  if (config.command == "kl-verify" && config.errors.empty()) {
    throw UsageError("missing required --errors for kl-verify");
  }
  return config;
}

nlohmann::json inputs_json(const RunConfig& config) {
  nlohmann::json j;
  j["command"] = config.command;
  j["n"] = config.n;
  j["s"] = config.s;
  j["tol"] = report_real(config.tol);
  j["seed"] = config.seed;
  j["trials"] = config.trials;
  j["jobs"] = config.jobs;
  j["group"] = config.group;
  j["errors"] = config.errors;
  j["m0_path"] = config.m0_path;
  j["m0_coeffs"] = config.m0_inline;
  j["output"] = config.output_path;
  j["human"] = config.human;
  j["timing"] = config.timing;
  return j;
}

RunConfig config_from_inputs(const nlohmann::json& inputs) {
  RunConfig config;
  config.command = inputs.at("command").get<std::string>();
  config.n = inputs.at("n").get<int>();
  config.s = inputs.at("s").get<int>();
  config.tol = inputs.at("tol").get<double>();
  config.seed = inputs.at("seed").get<std::uint64_t>();
  config.trials = inputs.at("trials").get<int>();
  config.jobs = inputs.at("jobs").get<int>();
  config.group = inputs.at("group").get<std::vector<std::string>>();
  config.errors = inputs.at("errors").get<std::vector<std::string>>();
  config.m0_path = inputs.at("m0_path").get<std::string>();
  config.m0_inline = inputs.at("m0_coeffs").get<std::string>();
  config.output_path = inputs.at("output").get<std::string>();
  config.human = inputs.at("human").get<bool>();
  config.timing = inputs.at("timing").get<bool>();
  return config;
}

namespace {

PauliGroup group_from_config(const RunConfig& config) {
  std::vector<PauliString> gens;
  gens.reserve(config.group.size());
  for (const auto& text : config.group) {
    gens.push_back(parse_pauli(text, config.n));
  }
  return generate_group(config.n, gens);
}

std::vector<LabeledUnitary> family_from_group(const PauliGroup& g) {
  std::vector<LabeledUnitary> fam;
  fam.reserve(g.elements.size());
  for (const auto& e : g.elements) {
    fam.push_back({pauli_to_string(e), to_matrix(e)});
  }
  return fam;
}

ComplexMatrix m0_from_config(const RunConfig& config) {
  if (!config.m0_inline.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(config.m0_inline);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("bad --m0-coeffs JSON: ") +
                                  e.what());
    }
    if (!j.is_object()) {
      throw std::invalid_argument("--m0-coeffs expects an object of "
                                  "{\"letters\": [re, im]}");
    }
    std::map<std::string, cplx> coeffs;
    for (const auto& [key, val] : j.items()) {
      if (!val.is_array() || val.size() != 2 || !val[0].is_number() ||
          !val[1].is_number()) {
        throw std::invalid_argument("coefficient for '" + key +
                                    "' must be [re, im]");
      }
      coeffs[key] = cplx(val[0].get<double>(), val[1].get<double>());
    }
    return m0_from_pauli_coeffs(config.n, coeffs);
  }
  std::ifstream in(config.m0_path);
  if (!in) {
    throw std::invalid_argument("cannot open m0 file '" + config.m0_path +
                                "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad m0 JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("coeffs")) {
    if (j.contains("n") && j["n"].get<int>() != config.n) {
      throw std::invalid_argument("m0 file qubit count differs from --n");
    }
    std::map<std::string, cplx> coeffs;
    for (const auto& [key, val] : j["coeffs"].items()) {
      coeffs[key] = cplx(val.at(0).get<double>(), val.at(1).get<double>());
    }
    return m0_from_pauli_coeffs(config.n, coeffs);
  }
  if (j.is_object() && j.contains("alpha")) {
    const M0Coefficients coeffs = m0_coeffs_from_json(text);
    if (coeffs.n != config.n) {
      throw std::invalid_argument("m0 file qubit count differs from --n");
    }
    return m0_matrix(coeffs);
  }
  const ComplexMatrix m = matrix_from_json(text);
  if (m.dim != (1 << config.n)) {
    throw std::invalid_argument("m0 matrix dimension is not 2^n");
  }
  return m;
}

void run_check_opsys(const RunConfig& config, nlohmann::json& details,
                     bool& verdict) {
  const PauliGroup g = group_from_config(config);
  const NcGraph graph =
      build_ncgraph(family_from_group(g), m0_from_config(config), config.tol);
  const OpSystemCheck check = is_operator_system(graph.space, config.tol);
  details["rank"] = graph.space.rank();
  details["witness"] = check.describe();
  details["residual"] = report_real(check.residual);
  verdict = check.ok;
}

void run_anticliques(const RunConfig& config, nlohmann::json& details,
                     bool& verdict) {
  const PauliGroup g = group_from_config(config);
  const NcGraph graph =
      build_ncgraph(family_from_group(g), m0_from_config(config), config.tol);
  const AnticliqueSearch search = find_anticliques(graph, config.tol);
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& cert : search.certificates) {
    nlohmann::json c;
    c["rank"] = cert.rank;
    c["residual"] = report_real(cert.residual);
    nlohmann::json scalars = nlohmann::json::object();
    for (const auto& [label, value] : cert.scalars) {
      scalars[label] = report_complex(value);
    }
    c["scalars"] = std::move(scalars);
    c["projector"] = report_matrix(cert.projector);
    certs.push_back(std::move(c));
  }
  nlohmann::json diags = nlohmann::json::array();
  for (const auto& diag : search.diagnostics) {
    nlohmann::json d;
    d["rank"] = diag.rank;
    d["residual"] = report_real(diag.residual);
    d["worst_label"] = diag.worst_label;
    d["projector"] = report_matrix(diag.projector);
    diags.push_back(std::move(d));
  }
  details["certificates"] = std::move(certs);
  details["diagnostics"] = std::move(diags);
  details["joint_blocks"] = search.joint_blocks;
  verdict = search.diagnostics.empty();
}

void run_kl_verify(const RunConfig& config, nlohmann::json& details,
                   bool& verdict) {
  const PauliGroup g = group_from_config(config);
  const ComplexMatrix p = codespace_projector(g);
  std::vector<ComplexMatrix> errs;
  for (const auto& text : config.errors) {
    errs.push_back(to_matrix(parse_pauli(text, config.n)));
  }
  const KlResult result = kl_verify(p, errs, config.tol);
  nlohmann::json lambda = nlohmann::json::array();
  for (const auto& row : result.lambda) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const cplx& v : row) {
      jrow.push_back(report_complex(v));
    }
    lambda.push_back(std::move(jrow));
  }
  details["lambda"] = std::move(lambda);
  details["max_residual"] = report_real(result.max_residual);
  details["code_rank"] = rank_of_projector(p);
  verdict = result.ok;
}

void run_stabilizer_span(const RunConfig& config, nlohmann::json& details,
                         bool& verdict) {
  const PauliGroup g = group_from_config(config);
  const SpanIdentity identity = stabilizer_span(g, config.tol);
  details["lhs_rank"] = identity.lhs.rank();
  details["rhs_rank"] = identity.rhs.rank();
  verdict = identity.equal;
}

void run_classical_check(const RunConfig& config, nlohmann::json& details,
                         bool& verdict) {
  const PauliGroup g = group_from_config(config);
  const ClassicalCheck check = classical_stabilizer_check(g, config.tol);
  nlohmann::json entries = nlohmann::json::array();
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& entry : check.entries) {
    nlohmann::json e;
    e["e"] = pauli_letters(entry.rep);
    e["compresses"] = entry.compresses;
    e["in_span"] = entry.in_span;
    e["scalar"] = report_complex(entry.scalar);
    if (entry.compresses != entry.in_span) {
      mismatches.push_back(e);
    }
    entries.push_back(std::move(e));
  }
  details["checked"] = static_cast<int>(check.entries.size());
  details["mismatch_count"] = check.mismatch_count;
  details["mismatches"] = std::move(mismatches);
  details["entries"] = std::move(entries);
  verdict = check.ok;
}

void run_canonicalize(const RunConfig& config, nlohmann::json& details,
                      bool& verdict) {
  const PauliGroup g = group_from_config(config);
  const CanonicalForm canon = clifford_canonicalize(g);
  const int d = 1 << config.n;
  double worst = hs_norm(
      sub(mul(adjoint(canon.u), canon.u), ComplexMatrix::identity(d)));
  for (std::size_t i = 0; i < canon.images.size(); ++i) {
    PauliString zi = PauliString::identity(config.n);
    zi.z_bits = 1ull << i;
    const double resid = hs_norm(sub(conjugate_by(canon.u, to_matrix(zi)),
                                     to_matrix(canon.images[i])));
    worst = std::max(worst, resid);
  }
  nlohmann::json images = nlohmann::json::array();
  for (const auto& img : canon.images) {
    images.push_back(pauli_to_string(img));
  }
  details["unitary"] = report_matrix(canon.u);
  details["images"] = std::move(images);
  details["gate_count"] = static_cast<int>(canon.gates.size());
  details["max_residual"] = report_real(worst);
  verdict = worst <= config.tol * std::sqrt(static_cast<double>(d));
}

void run_lemma_check(const RunConfig& config, nlohmann::json& details,
                     bool& verdict) {
  const LemmaTrialReport report = lemma_trials(
      config.n, config.s, config.trials, config.seed, config.tol);
  details["trials"] = report.trials;
  details["disagreements"] = report.disagreements;
  details["failing"] = report.failing;
  verdict = report.disagreements == 0;
}

}  // namespace

RunResult run(const RunConfig& config) {
#ifdef _OPENMP
  omp_set_num_threads(config.jobs);
#endif
  const auto start = std::chrono::steady_clock::now();

  nlohmann::json details = nlohmann::json::object();
  bool verdict = false;
  if (config.command == "check-opsys") {
    run_check_opsys(config, details, verdict);
  } else if (config.command == "anticliques") {
    run_anticliques(config, details, verdict);
  } else if (config.command == "kl-verify") {
    run_kl_verify(config, details, verdict);
  } else if (config.command == "stabilizer-span") {
    run_stabilizer_span(config, details, verdict);
  } else if (config.command == "classical-check") {
    run_classical_check(config, details, verdict);
  } else if (config.command == "canonicalize") {
    run_canonicalize(config, details, verdict);
  } else if (config.command == "lemma-check") {
    run_lemma_check(config, details, verdict);
  } else {
    throw UsageError("unknown command '" + config.command + "'");
  }

  RunResult result;
  const nlohmann::json inputs = inputs_json(config);
  result.report["schema"] = kReportSchema;
  result.report["version"] = kVersion;
  result.report["command"] = config.command;
  result.report["inputs"] = inputs;
  result.report["inputs_digest"] = digest(inputs);
  result.report["verdict"] = verdict;
  result.report["details"] = std::move(details);
  if (config.timing) {
    // opt-in: wall time breaks byte-for-byte report stability
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    result.report["elapsed_ms"] = static_cast<std::int64_t>(elapsed.count());
  }
  result.exit_code = verdict ? 0 : 1;
  return result;
}

std::string render_human(const nlohmann::json& report) {
  std::ostringstream out;
  out << report["command"].get<std::string>() << ": "
      << (report["verdict"].get<bool>() ? "PASS" : "FAIL") << "\n";
  const auto& details = report["details"];
  for (auto it = details.begin(); it != details.end(); ++it) {
    if (it.value().is_number() || it.value().is_string() ||
        it.value().is_boolean()) {
      out << "  " << it.key() << ": " << it.value().dump() << "\n";
    } else if (it.value().is_array()) {
      out << "  " << it.key() << ": " << it.value().size() << " item(s)\n";
    }
  }
  return out.str();
}

}  // namespace ncg::cli

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ncgraph/cli.hpp"
#include "ncgraph/version.hpp"

namespace {

const char* kUsage = R"(ncgraph <command> [flags]

commands:
  check-opsys      decide whether span{u m0 u† : u in <group>} is an
                   operator system (unital, adjoint-closed)
  anticliques      certify every rank >= 2 joint eigenprojector of the
                   group as an anticlique of that span
  kl-verify        Knill-Laflamme check of --errors against the stabilizer
                   codespace projector of --group
  stabilizer-span  compare the union of admissible-seed spans against
                   span{I, Paulis outside the normalizer}
  classical-check  brute-force PEP = cP <=> E in span{(P_n \ N(G)) u G}
                   over all 4^n Paulis
  canonicalize     Clifford circuit mapping Z_1..Z_s onto the generators
  lemma-check      seeded trials comparing the coefficient-level
                   admissibility test with the numerical one

flags:
  --n INT          qubit count (required)
  --group LIST     comma-separated Pauli generators, e.g. "ZZI,IZZ"
  --group-file F   generators as a JSON array of strings
  --m0 FILE        seed operator as JSON (dense matrix, letter or digit
                   coefficient form)
  --m0-coeffs JSON inline letter coefficients, e.g. '{"I":[1,0],"Y":[0,1]}'
  --errors LIST    comma-separated error Paulis for kl-verify
  --errors-file F  error Paulis as a JSON array of strings
  --s INT          stabilized-qubit count for lemma-check (default n)
  --tol REAL       tolerance (default 1e-9; NCGRAPH_TOL overrides default)
  --seed UINT      RNG seed for sampled subcommands (default 0)
  --trials INT     trial count for lemma-check (default 200)
  --jobs INT       worker threads for brute-force loops (default 1)
  --output FILE    write the report there instead of stdout
  --human          text summary instead of JSON
  --timing         add elapsed_ms to the report (breaks byte determinism)

exit codes: 0 verdict true, 1 verdict false, 2 usage or input error.
)";

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (!args.empty() && (args[0] == "--help" || args[0] == "-h")) {
    std::cout << kUsage;
    return 0;
  }
  if (!args.empty() && args[0] == "--version") {
    std::cout << "ncgraph " << ncg::kVersion << "\n";
    return 0;
  }
  try {
    const ncg::cli::RunConfig config = ncg::cli::parse_inputs(args);
    const ncg::cli::RunResult result = ncg::cli::run(config);
    const std::string text = config.human
                                 ? ncg::cli::render_human(result.report)
                                 : result.report.dump(2) + "\n";
    if (config.output_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(config.output_path);
      if (!out) {
        std::cerr << "error: cannot write '" << config.output_path << "'\n";
        return 2;
      }
      out << text;
    }
    return result.exit_code;
  } catch (const ncg::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

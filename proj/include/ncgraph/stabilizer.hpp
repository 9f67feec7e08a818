#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncgraph/pauli.hpp"
#include "ncgraph/subspace.hpp"

namespace ncg {

// For G = <Z_1,...,Z_s> the admissible seed operators m0 decompose into
// "blocks": a block is selected by a nonzero bit vector u over the first s
// qubits, bit u_r = 1 forcing sigma index j_r into {2,3} (X or Y) and
// u_r = 0 forcing it into {0,1} (I or Z); the tail indices j_{s+1..n} are
// free. Admissibility asks that, per block, all coefficients lie on one
// complex line through the origin.

/// Coefficients of m0 = sum alpha_J sigma_{j_1} x ... x sigma_{j_n},
/// keyed by the digit tuple J (sigma indices 0..3).
struct M0Coefficients {
  int n = 0;
  int s = 0;
  std::map<std::vector<std::uint8_t>, cplx> alpha;
};

/// Block selector of a key: bit r set iff j_r in {2,3}, r < s. Zero head
/// masks select no block.
std::uint32_t block_mask(const std::vector<std::uint8_t>& key, int s);

struct M0Violation {
  enum class Kind { identity_zero, forbidden_key, line_broken } kind;
  std::string where;  // key digits or block mask bits
  std::string describe() const;
};

struct M0Check {
  bool ok = false;
  std::vector<M0Violation> violations;
};

/// The three admissibility conditions: nonzero identity coefficient, no
/// support on keys whose first s indices stay in {0,1} (other than the
/// identity key), and the per-block complex-line condition. The line test
/// uses | sum v_k^2 | = sum |v_k|^2, which avoids dividing by small
/// coefficients.
M0Check validate_m0(const M0Coefficients& coeffs, double tol = kDefaultTol);

/// Random admissible coefficients, deterministic per seed: per nonzero
/// block one phase and a few real amplitudes.
M0Coefficients sample_m0(int n, int s, std::uint64_t seed);

ComplexMatrix m0_matrix(const M0Coefficients& coeffs,
                        int cap = kDenseQubitCap);

/// The analytic span {I} + one summed matrix per nonzero block; equals the
/// numerically built conjugation span for admissible coefficients. Throws
/// on invalid coefficients or s = 0.
OperatorSubspace m0_subspace(const M0Coefficients& coeffs,
                             double tol = kDefaultTol);

struct SpanIdentity {
  OperatorSubspace lhs;  // union of spans V_{I + sigma} over block sigmas
  OperatorSubspace rhs;  // span of {I} and every Pauli outside N(G)
  bool equal = false;
};

/// Compares the union of conjugation spans of the admissible seeds I + sigma
/// against span{I, P_n \ N(G)}. sigma ranges over the canonical-frame block
/// Paulis, conjugated back through clifford_canonicalize. Rejects the
/// trivial group (s = 0) and n > 5.
SpanIdentity stabilizer_span(const PauliGroup& g, double tol = kDefaultTol);

struct ClassicalCheckEntry {
  PauliString rep;       // Hermitian letter form, +1 sign
  bool compresses;       // P E P = c P
  cplx scalar;           // the c above
  bool in_span;          // E outside N(G), or E in G up to phase
};

struct ClassicalCheck {
  bool ok = false;  // compresses <=> in_span for all 4^n strings
  std::vector<ClassicalCheckEntry> entries;
  int mismatch_count = 0;
};

/// Brute force over all 4^n phase-free Paulis with P the codespace
/// projector. Capped at n <= 4.
ClassicalCheck classical_stabilizer_check(const PauliGroup& g,
                                          double tol = kDefaultTol);

struct LemmaTrialReport {
  int trials = 0;
  int disagreements = 0;
  std::vector<int> failing;  // trial indices
};

/// Seeded trials alternating admissible samples and perturbed-invalid ones;
/// each compares validate_m0 against the numerical operator-system check of
/// the conjugation span over <Z_1..Z_s>.
LemmaTrialReport lemma_trials(int n, int s, int trials, std::uint64_t seed,
                              double tol = kDefaultTol);

/// Coefficient JSON {"n":.., "s":.., "alpha": {"j1 j2 ... jn": [re, im]}}.
std::string m0_coeffs_to_json(const M0Coefficients& coeffs);
M0Coefficients m0_coeffs_from_json(const std::string& text);

}  // namespace ncg

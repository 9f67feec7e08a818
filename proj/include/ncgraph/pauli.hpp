#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncgraph/complex_matrix.hpp"

namespace ncg {

inline constexpr int kMaxQubits = 32;        // symplectic encoding bound
inline constexpr int kDenseQubitCap = 12;    // default to_matrix cap

// Single-qubit convention used throughout, by sigma index:
//   0 = I, 1 = Z, 2 = X, 3 = Y with Y = [[0, i], [-i, 0]].
// This Y is the sign-flip of the more common [[0, -i], [i, 0]]; parsing and
// printing both follow it, so interop with other toolkits must flip Y signs.

/// n-qubit Pauli operator i^phase_exp * tensor_j (X^{x_j} Z^{z_j}),
/// qubit 0 leftmost both in strings and in tensor products. Under this
/// encoding Y = -i * XZ, i.e. the letter Y at one qubit carries phase_exp 3.
struct PauliString {
  int n = 0;
  int phase_exp = 0;  // global factor i^phase_exp, in {0,1,2,3}
  std::uint64_t x_bits = 0;
  std::uint64_t z_bits = 0;

  bool x(int q) const { return (x_bits >> q) & 1u; }
  bool z(int q) const { return (z_bits >> q) & 1u; }

  bool operator==(const PauliString& o) const = default;

  static PauliString identity(int n);
};

/// Strict weak order on (x_bits, z_bits, phase_exp); identity sorts first.
bool pauli_less(const PauliString& p, const PauliString& q);

/// Accepts an optional prefix from {"+","-","i","-i"} followed by exactly
/// n letters from {I,X,Y,Z}.
PauliString parse_pauli(const std::string& text, int n);

/// Letter form without the phase prefix.
std::string pauli_letters(const PauliString& p);
/// Full form with prefix ("", "i", "-", "-i").
std::string pauli_to_string(const PauliString& p);

PauliString pauli_mul(const PauliString& p, const PauliString& q);
bool commutes(const PauliString& p, const PauliString& q);

/// Copy with phase_exp forced to 0. Used wherever only the span of the
/// operator matters (normalizers, span comparisons).
PauliString phase_free(const PauliString& p);

/// Per-qubit sigma indices (phase dropped).
std::vector<std::uint8_t> pauli_digits(const PauliString& p);
/// The Hermitian operator sigma_{j_1} x ... x sigma_{j_n} with +1 sign.
PauliString pauli_from_digits(const std::vector<std::uint8_t>& digits);
/// digits <-> base-4 ordinal, qubit 0 most significant.
std::uint64_t pauli_ordinal(const PauliString& p);
PauliString pauli_from_ordinal(int n, std::uint64_t ordinal);

ComplexMatrix to_matrix(const PauliString& p, int cap = kDenseQubitCap);

/// A generated subgroup of the n-qubit Pauli group, fully enumerated with
/// phases. is_abelian and minus_identity_free together make it a stabilizer
/// group (the common +1 eigenspace is then nonzero).
struct PauliGroup {
  int n = 0;
  std::vector<PauliString> generators;
  std::vector<PauliString> elements;  // sorted, identity first
  bool is_abelian = false;
  bool minus_identity_free = false;

  bool valid_stabilizer() const { return is_abelian && minus_identity_free; }
  /// log2(|elements|); exact for valid stabilizer groups.
  int log2_order() const;
  bool contains_bits(const PauliString& p) const;
};

/// Closure under multiplication. cap = 0 means the default 4 * 4^n; an
/// enumeration past the cap throws.
PauliGroup generate_group(int n, const std::vector<PauliString>& gens,
                          std::uint64_t cap = 0);

/// All 4^n phase-free strings commuting with every generator, in ordinal
/// order. Requires a valid stabilizer group: -I not in G makes the
/// normalizer coincide with the centralizer, so the symplectic test is the
/// whole story.
std::vector<PauliString> normalizer(const PauliGroup& g);

/// P = (1/|G|) sum_g matrix(g); projector of rank 2^(n-s).
ComplexMatrix codespace_projector(const PauliGroup& g,
                                  int cap = kDenseQubitCap);

}  // namespace ncg

#pragma once

#include <vector>

#include "ncgraph/pauli.hpp"

namespace ncg {

enum class Gate { H, S, CNOT, X, Z };

struct CliffordGate {
  Gate g;
  int a = 0;   // qubit (control for CNOT)
  int b = -1;  // CNOT target
};

/// Image of p under conjugation by the gate, with exact phase tracking.
PauliString conjugate_pauli(const CliffordGate& gate, const PauliString& p);
PauliString conjugate_pauli(const std::vector<CliffordGate>& gates,
                            const PauliString& p);

ComplexMatrix gate_unitary(const CliffordGate& gate, int n);
/// Product with later gates on the left: gates[k-1] * ... * gates[0].
ComplexMatrix circuit_unitary(const std::vector<CliffordGate>& gates, int n);

struct CanonicalForm {
  ComplexMatrix u;                  // u Z_i u† = images[i], exactly
  std::vector<PauliString> images;  // the group's generators, in order
  std::vector<CliffordGate> gates;  // elimination circuit (for diagnostics)
};

/// Symplectic Gaussian elimination over GF(2) with H/S/CNOT, plus Pauli
/// sign corrections. Maps each Z_i onto the i-th given generator. Throws on
/// GF(2)-dependent generators and on non-stabilizer input.
CanonicalForm clifford_canonicalize(const PauliGroup& g);

}  // namespace ncg

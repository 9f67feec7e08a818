#include "ncgraph/clifford.hpp"

#include <stdexcept>
#include <string>

namespace ncg {

namespace {

PauliString single(int n, int q, bool x, bool z, int pe = 0) {
  PauliString p = PauliString::identity(n);
  if (x) p.x_bits |= 1ull << q;
  if (z) p.z_bits |= 1ull << q;
  p.phase_exp = pe;
  return p;
}

// Images of X_q and Z_q under conjugation by each gate.
PauliString image_x(const CliffordGate& g, int n, int q) {
  switch (g.g) {
    case Gate::H:
      if (q == g.a) return single(n, q, false, true);  // X -> Z
      break;
    case Gate::S:
      if (q == g.a) return single(n, q, true, true, 1);  // X -> i XZ
      break;
    case Gate::X:
      break;
    case Gate::Z:
      if (q == g.a) return single(n, q, true, false, 2);  // X -> -X
      break;
    case Gate::CNOT:
      if (q == g.a) {  // X_c -> X_c X_t
        PauliString p = PauliString::identity(n);
        p.x_bits = (1ull << g.a) | (1ull << g.b);
        return p;
      }
      break;
  }
  return single(n, q, true, false);
}

PauliString image_z(const CliffordGate& g, int n, int q) {
  switch (g.g) {
    case Gate::H:
      if (q == g.a) return single(n, q, true, false);  // Z -> X
      break;
    case Gate::S:
      break;
    case Gate::X:
      if (q == g.a) return single(n, q, false, true, 2);  // Z -> -Z
      break;
    case Gate::Z:
      break;
    case Gate::CNOT:
      if (q == g.b) {  // Z_t -> Z_c Z_t
        PauliString p = PauliString::identity(n);
        p.z_bits = (1ull << g.a) | (1ull << g.b);
        return p;
      }
      break;
  }
  return single(n, q, false, true);
}

}  // namespace

PauliString conjugate_pauli(const CliffordGate& gate, const PauliString& p) {
  // p = i^pe * prod_q X_q^{x_q} * prod_q Z_q^{z_q}; conjugation is
  // multiplicative, so push each factor through the gate.
  PauliString r = PauliString::identity(p.n);
  r.phase_exp = p.phase_exp;
  for (int q = 0; q < p.n; ++q) {
    if (p.x(q)) {
      r = pauli_mul(r, image_x(gate, p.n, q));
    }
  }
  for (int q = 0; q < p.n; ++q) {
    if (p.z(q)) {
      r = pauli_mul(r, image_z(gate, p.n, q));
    }
  }
  return r;
}

PauliString conjugate_pauli(const std::vector<CliffordGate>& gates,
                            const PauliString& p) {
  PauliString r = p;
  for (const auto& g : gates) {
    r = conjugate_pauli(g, r);
  }
  return r;
}

ComplexMatrix gate_unitary(const CliffordGate& gate, int n) {
  const int d = 1 << n;
  if (gate.g == Gate::CNOT) {
    // qubit 0 is the most significant bit of the basis index
    ComplexMatrix m(d);
    const int cbit = n - 1 - gate.a;
    const int tbit = n - 1 - gate.b;
    for (int i = 0; i < d; ++i) {
      const int j = ((i >> cbit) & 1) ? (i ^ (1 << tbit)) : i;
      m.at(j, i) = 1.0;
    }
    return m;
  }
  const double rs = 1.0 / std::sqrt(2.0);
  ComplexMatrix g2;
  switch (gate.g) {
    case Gate::H:
      g2 = ComplexMatrix::from_rows({{rs, rs}, {rs, -rs}});
      break;
    case Gate::S:
      g2 = ComplexMatrix::from_rows({{1, 0}, {0, cplx(0, 1)}});
      break;
    case Gate::X:
      g2 = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
      break;
    case Gate::Z:
      g2 = ComplexMatrix::from_rows({{1, 0}, {0, -1}});
      break;
    default:
      throw std::logic_error("unreachable gate kind");
  }
  ComplexMatrix m = ComplexMatrix::identity(1);
  for (int q = 0; q < n; ++q) {
    m = kron(m, q == gate.a ? g2 : ComplexMatrix::identity(2));
  }
  return m;
}

ComplexMatrix circuit_unitary(const std::vector<CliffordGate>& gates, int n) {
  ComplexMatrix u = ComplexMatrix::identity(1 << n);
  for (const auto& g : gates) {
    u = mul(gate_unitary(g, n), u);
  }
  return u;
}

namespace {

int gf2_rank(const std::vector<PauliString>& rows, int n) {
  std::vector<std::uint64_t> m;  // x bits | z bits << n
  m.reserve(rows.size());
  for (const auto& r : rows) {
    m.push_back(r.x_bits | (r.z_bits << n));
  }
  int rank = 0;
  for (int bit = 0; bit < 2 * n; ++bit) {
    int pivot = -1;
    for (std::size_t i = rank; i < m.size(); ++i) {
      if ((m[i] >> bit) & 1u) {
        pivot = static_cast<int>(i);
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) != rank && ((m[i] >> bit) & 1u)) {
        m[i] ^= m[rank];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

/*
 * Row r is reduced to +Z_r in four moves, each a conjugation applied to all
 * rows: (1) bring an X (or, failing that, a Z) to qubit r from qubits >= r,
 * using S to strip a Y and a CNOT-triple SWAP to relocate; (2) clear the
 * remaining support on qubits > r (CNOT fan-out from r in the X branch,
 * CNOT(q', r) in the pure-Z branch); (3) clear Z factors on qubits < r with
 * CNOT(j, r), which fixes every already-finished row Z_j; (4) flip the sign
 * with X_r if needed. Rows are never swapped or recombined, so the i-th
 * generator itself ends as Z_i and U Z_i U† reproduces it exactly.
 */
CanonicalForm clifford_canonicalize(const PauliGroup& grp) {
  if (!grp.valid_stabilizer()) {
    throw std::invalid_argument(
        "canonicalization requires an abelian group without -I");
  }
  const int n = grp.n;
  const int s = static_cast<int>(grp.generators.size());
  if (s > n) {
    throw std::invalid_argument("more generators than qubits");
  }
  if (gf2_rank(grp.generators, n) != s) {
    throw std::invalid_argument("generators are GF(2)-dependent");
  }

  std::vector<PauliString> rows = grp.generators;
  std::vector<CliffordGate> gates;
  auto apply = [&](CliffordGate g) {
    for (auto& row : rows) {
      row = conjugate_pauli(g, row);
    }
    gates.push_back(g);
  };
  auto swap_qubits = [&](int a, int b) {
    apply({Gate::CNOT, a, b});
    apply({Gate::CNOT, b, a});
    apply({Gate::CNOT, a, b});
  };

  for (int r = 0; r < s; ++r) {
    int pivot_x = -1, pivot_z = -1;
    for (int q = r; q < n; ++q) {
      if (pivot_x < 0 && rows[r].x(q)) pivot_x = q;
      if (pivot_z < 0 && rows[r].z(q)) pivot_z = q;
    }
    if (pivot_x >= 0) {
      if (rows[r].z(pivot_x)) {
        apply({Gate::S, pivot_x});
      }
      if (pivot_x != r) {
        swap_qubits(pivot_x, r);
      }
      for (int q = r + 1; q < n; ++q) {
        if (rows[r].x(q)) {
          if (rows[r].z(q)) {
            apply({Gate::S, q});
          }
          apply({Gate::CNOT, r, q});
        }
      }
      for (int q = r + 1; q < n; ++q) {
        if (rows[r].z(q)) {
          apply({Gate::H, q});
          apply({Gate::CNOT, r, q});
        }
      }
      apply({Gate::H, r});
    } else if (pivot_z >= 0) {
      if (pivot_z != r) {
        swap_qubits(pivot_z, r);
      }
      for (int q = r + 1; q < n; ++q) {
        if (rows[r].z(q)) {
          apply({Gate::CNOT, q, r});
        }
      }
    } else {
      throw std::invalid_argument(
          "generator " + std::to_string(r) +
          " has no support past finished qubits (dependent set)");
    }
    for (int j = 0; j < r; ++j) {
      if (rows[r].z(j)) {
        apply({Gate::CNOT, j, r});
      }
    }
    if (rows[r].phase_exp == 2) {
      apply({Gate::X, r});
    }
    PauliString want = PauliString::identity(n);
    want.z_bits = 1ull << r;
    if (!(rows[r] == want)) {
      throw std::logic_error("row failed to reduce to Z_" + std::to_string(r));
    }
  }

  CanonicalForm out;
  out.gates = gates;
  out.images = grp.generators;
  // The gates conjugate g_i to Z_i in application order, so
  // U = gate_1† gate_2† ... gate_N† maps Z_i back onto g_i.
  out.u = ComplexMatrix::identity(1 << n);
  for (const auto& g : gates) {
    out.u = mul(out.u, adjoint(gate_unitary(g, n)));
  }
  return out;
}

}  // namespace ncg

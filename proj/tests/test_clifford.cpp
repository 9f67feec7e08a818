#include <random>

#include "doctest.h"
#include "ncgraph/clifford.hpp"
#include "test_support.hpp"

using namespace ncg;
using namespace ncgtest;

// conjugate_pauli must agree with matrix conjugation for every gate and
// every Pauli; this pins the exact phase bookkeeping.
TEST_CASE("gate conjugation matches matrix conjugation exhaustively") {
  std::vector<CliffordGate> gates = {
      {Gate::H, 0},       {Gate::S, 0},       {Gate::X, 1}, {Gate::Z, 1},
      {Gate::CNOT, 0, 1}, {Gate::CNOT, 1, 0},
  };
  const int n = 2;
  for (const auto& gate : gates) {
    const ComplexMatrix u = gate_unitary(gate, n);
    CHECK(hs_norm(sub(mul(adjoint(u), u), ComplexMatrix::identity(1 << n))) <
          1e-13);
    for (std::uint64_t ord = 0; ord < 16; ++ord) {
      for (int pe = 0; pe < 4; ++pe) {
        PauliString p = pauli_from_ordinal(n, ord);
        p.phase_exp = (p.phase_exp + pe) & 3;
        const PauliString image = conjugate_pauli(gate, p);
        CHECK(matrix_close(to_matrix(image), conjugate_by(u, to_matrix(p)),
                           1e-12));
      }
    }
  }
}

TEST_CASE("circuit_unitary composes in application order") {
  std::mt19937_64 rng(31);
  const int n = 3;
  const auto gates = random_clifford_gates(n, 12, rng);
  const ComplexMatrix c = circuit_unitary(gates, n);
  for (std::uint64_t ord : {1ull, 7ull, 23ull, 41ull}) {
    const PauliString p = pauli_from_ordinal(n, ord);
    CHECK(matrix_close(to_matrix(conjugate_pauli(gates, p)),
                       conjugate_by(c, to_matrix(p)), 1e-11));
  }
}

TEST_CASE("clifford_canonicalize fixtures") {
  SUBCASE("<Z_1> is already canonical") {
    const CanonicalForm canon =
        clifford_canonicalize(generate_group(1, {parse_pauli("Z", 1)}));
    CHECK(canon.gates.empty());
    CHECK(matrix_close(canon.u, ComplexMatrix::identity(2)));
  }

  SUBCASE("<X> canonicalizes through a Hadamard") {
    const CanonicalForm canon =
        clifford_canonicalize(generate_group(1, {parse_pauli("X", 1)}));
    const double rs = 1.0 / std::sqrt(2.0);
    CHECK(matrix_close(canon.u,
                       ComplexMatrix::from_rows({{rs, rs}, {rs, -rs}}),
                       1e-14));
    CHECK(matrix_close(conjugate_by(canon.u, mat_z()), mat_x(), 1e-14));
  }

  SUBCASE("<XX, ZZ> verified by matrix conjugation") {
    const PauliGroup g =
        generate_group(2, {parse_pauli("XX", 2), parse_pauli("ZZ", 2)});
    const CanonicalForm canon = clifford_canonicalize(g);
    CHECK(hs_norm(sub(mul(adjoint(canon.u), canon.u),
                      ComplexMatrix::identity(4))) < 1e-12);
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
      PauliString zi = PauliString::identity(2);
      zi.z_bits = 1ull << i;
      CHECK(matrix_close(conjugate_by(canon.u, to_matrix(zi)),
                         to_matrix(g.generators[i]), 1e-12));
    }
  }

  SUBCASE("signed generator") {
    const CanonicalForm canon =
        clifford_canonicalize(generate_group(1, {parse_pauli("-Z", 1)}));
    CHECK(matrix_close(conjugate_by(canon.u, mat_z()),
                       scale(-1.0, mat_z()), 1e-14));
  }

  SUBCASE("dependent generators are rejected") {
    CHECK_THROWS_AS(clifford_canonicalize(generate_group(
                        2, {parse_pauli("ZZ", 2), parse_pauli("ZZ", 2)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(clifford_canonicalize(generate_group(
                        2, {parse_pauli("ZI", 2), parse_pauli("IZ", 2),
                            parse_pauli("ZZ", 2)})),
                    std::invalid_argument);
  }

  SUBCASE("non-stabilizer input is rejected") {
    CHECK_THROWS_AS(clifford_canonicalize(generate_group(
                        1, {parse_pauli("X", 1), parse_pauli("Z", 1)})),
                    std::invalid_argument);
  }
}

TEST_CASE("clifford_canonicalize on random stabilizer groups") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int s = 1 + static_cast<int>(rng() % n);
    const PauliGroup g = random_stabilizer_group(n, s, rng);
    const CanonicalForm canon = clifford_canonicalize(g);
    const int d = 1 << n;
    CHECK(hs_norm(sub(mul(adjoint(canon.u), canon.u),
                      ComplexMatrix::identity(d))) < 1e-9);
    REQUIRE(canon.images.size() == g.generators.size());
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
      PauliString zi = PauliString::identity(n);
      zi.z_bits = 1ull << i;
      CHECK(hs_norm(sub(conjugate_by(canon.u, to_matrix(zi)),
                        to_matrix(canon.images[i]))) < 1e-9);
      CHECK(canon.images[i] == g.generators[i]);
    }
  }
}

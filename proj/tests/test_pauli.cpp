#include <set>

#include "doctest.h"
#include "ncgraph/pauli.hpp"
#include "test_support.hpp"

using namespace ncg;
using namespace ncgtest;

TEST_CASE("parse_pauli fixtures") {
  const PauliString zi = parse_pauli("ZI", 2);
  CHECK(zi.phase_exp == 0);
  CHECK(zi.x_bits == 0);
  CHECK(zi.z(0));
  CHECK_FALSE(zi.z(1));

  const PauliString mxx = parse_pauli("-XX", 2);
  CHECK(mxx.phase_exp == 2);
  CHECK(mxx.x_bits == 0b11);
  CHECK(mxx.z_bits == 0);

  // Y follows the [[0, i], [-i, 0]] convention
  CHECK(matrix_close(to_matrix(parse_pauli("Y", 1)), mat_y(), 1e-15));

  // qubit 0 is the leftmost letter and the leftmost tensor factor
  CHECK(matrix_close(to_matrix(parse_pauli("Z", 1)), mat_z(), 1e-15));
  CHECK(matrix_close(to_matrix(parse_pauli("XI", 2)), kron(mat_x(), mat_i()),
                     1e-15));

  CHECK_THROWS_AS(parse_pauli("XY", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("Q", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("*X", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("", 1), std::invalid_argument);
}

TEST_CASE("parse/print round trip") {
  for (const char* text : {"XIZ", "-YYX", "iZZZ", "-iIXY", "III"}) {
    const PauliString p = parse_pauli(text, 3);
    const std::string printed = pauli_to_string(p);
    CHECK(printed == std::string(text));
    CHECK(parse_pauli(printed, 3) == p);
  }
}

TEST_CASE("pauli_mul fixtures") {
  const PauliString x = parse_pauli("X", 1);
  const PauliString z = parse_pauli("Z", 1);

  // X Z = [[0,-1],[1,0]] = i Y under this Y convention
  const PauliString xz = pauli_mul(x, z);
  CHECK(xz == parse_pauli("iY", 1));
  const ComplexMatrix oracle = mul(mat_x(), mat_z());
  CHECK(matrix_close(oracle, scale(cplx(0, 1), mat_y()), 1e-15));
  CHECK(matrix_close(to_matrix(xz), oracle, 1e-15));

  CHECK(pauli_mul(z, z) == PauliString::identity(1));

  const PauliString zz = parse_pauli("ZZ", 2);
  const PauliString xx = parse_pauli("XX", 2);
  CHECK(matrix_close(to_matrix(pauli_mul(zz, xx)),
                     mul(to_matrix(zz), to_matrix(xx)), 1e-15));
}

TEST_CASE("multiplication and commutation agree with matrices, exhaustively") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t total = 1ull << (2 * n);
    std::vector<PauliString> all;
    std::vector<ComplexMatrix> mats;
    for (std::uint64_t ord = 0; ord < total; ++ord) {
      all.push_back(pauli_from_ordinal(n, ord));
      mats.push_back(to_matrix(all.back()));
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        const ComplexMatrix prod = mul(mats[i], mats[j]);
        CHECK(max_abs_diff(to_matrix(pauli_mul(all[i], all[j])), prod) <
              1e-12);
        const double comm_norm =
            hs_norm(sub(prod, mul(mats[j], mats[i])));
        CHECK(commutes(all[i], all[j]) == (comm_norm <= 1e-12));
      }
    }
  }
}

TEST_CASE("commutes with identity and the fourth-power relation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    PauliString p = PauliString::identity(n);
    p.x_bits = rng() & ((1ull << n) - 1);
    p.z_bits = rng() & ((1ull << n) - 1);
    p.phase_exp = static_cast<int>(rng() % 4);
    CHECK(commutes(p, PauliString::identity(n)));
    const PauliString fourth =
        pauli_mul(pauli_mul(p, p), pauli_mul(p, p));
    CHECK(fourth == PauliString::identity(n));
  }
}

TEST_CASE("generate_group fixtures") {
  const PauliGroup z = generate_group(1, {parse_pauli("Z", 1)});
  CHECK(z.elements.size() == 2);
  CHECK(z.is_abelian);
  CHECK(z.minus_identity_free);
  CHECK(z.log2_order() == 1);

  // words in X and Z only reach signs, never +-i: {+-I, +-X, +-Z, +-XZ}
  const PauliGroup xz =
      generate_group(1, {parse_pauli("X", 1), parse_pauli("Z", 1)});
  CHECK(xz.elements.size() == 8);
  CHECK_FALSE(xz.is_abelian);
  CHECK_FALSE(xz.minus_identity_free);

  // the full single-qubit Pauli group needs Y and has order 16
  const PauliGroup p1 = generate_group(
      1, {parse_pauli("X", 1), parse_pauli("Y", 1), parse_pauli("Z", 1)});
  CHECK(p1.elements.size() == 16);

  const PauliGroup rep =
      generate_group(3, {parse_pauli("ZZI", 3), parse_pauli("IZZ", 3)});
  CHECK(rep.elements.size() == 4);
  CHECK(rep.valid_stabilizer());

  // iX squares to -I
  CHECK_FALSE(generate_group(1, {parse_pauli("iX", 1)}).minus_identity_free);
  // {I, -Z} is a legitimate stabilizer group
  CHECK(generate_group(1, {parse_pauli("-Z", 1)}).valid_stabilizer());

  CHECK_THROWS_AS(
      generate_group(1, {parse_pauli("X", 1), parse_pauli("Z", 1)}, 5),
      std::runtime_error);
  CHECK_THROWS_AS(generate_group(2, {parse_pauli("X", 1)}),
                  std::invalid_argument);
}

TEST_CASE("trivial group enumerates to the identity alone") {
  const PauliGroup trivial = generate_group(2, {});
  CHECK(trivial.elements.size() == 1);
  CHECK(trivial.valid_stabilizer());
  CHECK(trivial.log2_order() == 0);
}

TEST_CASE("normalizer fixtures") {
  const PauliGroup z1 = generate_group(1, {parse_pauli("Z", 1)});
  const auto n1 = normalizer(z1);
  REQUIRE(n1.size() == 2);
  CHECK(pauli_letters(n1[0]) == "I");
  CHECK(pauli_letters(n1[1]) == "Z");

  // <Z_1> on two qubits: {I,Z} x {I,X,Y,Z}
  const PauliGroup z1n2 = generate_group(2, {parse_pauli("ZI", 2)});
  const auto n2 = normalizer(z1n2);
  REQUIRE(n2.size() == 8);
  std::set<std::string> letters;
  for (const auto& rep : n2) {
    letters.insert(pauli_letters(rep));
  }
  const std::set<std::string> expect = {"II", "IZ", "IX", "IY",
                                        "ZI", "ZZ", "ZX", "ZY"};
  CHECK(letters == expect);

  const PauliGroup trivial = generate_group(2, {});
  CHECK(normalizer(trivial).size() == 16);

  CHECK_THROWS_AS(
      normalizer(generate_group(1, {parse_pauli("X", 1), parse_pauli("Z", 1)})),
      std::invalid_argument);
}

TEST_CASE("normalizer is closed and contains the group, phase-free") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const int s = 1 + static_cast<int>(rng() % n);
    const PauliGroup g = random_stabilizer_group(n, s, rng);
    const auto reps = normalizer(g);
    std::set<std::pair<std::uint64_t, std::uint64_t>> bits;
    for (const auto& rep : reps) {
      bits.insert({rep.x_bits, rep.z_bits});
    }
    for (const auto& e : g.elements) {
      CHECK(bits.count({e.x_bits, e.z_bits}) == 1);
    }
    // closure under phase-free multiplication, spot-checked
    for (int k = 0; k < 40; ++k) {
      const auto& p = reps[rng() % reps.size()];
      const auto& q = reps[rng() % reps.size()];
      const PauliString prod = phase_free(pauli_mul(p, q));
      CHECK(bits.count({prod.x_bits, prod.z_bits}) == 1);
    }
  }
}

TEST_CASE("codespace_projector fixtures") {
  const PauliGroup z = generate_group(1, {parse_pauli("Z", 1)});
  CHECK(matrix_close(codespace_projector(z),
                     ComplexMatrix::from_rows({{1, 0}, {0, 0}})));

  // repetition code: projector onto |000>, |111>
  const PauliGroup rep =
      generate_group(3, {parse_pauli("ZZI", 3), parse_pauli("IZZ", 3)});
  ComplexMatrix expect(8);
  expect.at(0, 0) = 1.0;
  expect.at(7, 7) = 1.0;
  CHECK(matrix_close(codespace_projector(rep), expect));

  const PauliGroup trivial = generate_group(2, {});
  CHECK(matrix_close(codespace_projector(trivial),
                     ComplexMatrix::identity(4)));

  // {I, -Z} stabilizes |1>
  const PauliGroup mz = generate_group(1, {parse_pauli("-Z", 1)});
  CHECK(matrix_close(codespace_projector(mz),
                     ComplexMatrix::from_rows({{0, 0}, {0, 1}})));
}

TEST_CASE("codespace_projector properties on random groups") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int s = 1 + static_cast<int>(rng() % n);
    const PauliGroup g = random_stabilizer_group(n, s, rng);
    const ComplexMatrix p = codespace_projector(g);
    CHECK(hs_norm(sub(p, adjoint(p))) < 1e-12);
    CHECK(hs_norm(sub(mul(p, p), p)) < 1e-12);
    CHECK(std::lround(trace(p).real()) == (1 << (g.n - g.log2_order())));
  }
}

#include <random>

#include "doctest.h"
#include "ncgraph/spectral.hpp"
#include "test_support.hpp"

using namespace ncg;
using namespace ncgtest;

namespace {

void check_decomposition_invariants(const ComplexMatrix& u,
                                    const SpectralDecomposition& dec,
                                    double tol = 1e-9) {
  const int d = u.dim;
  ComplexMatrix sum(d), recon(d);
  for (const auto& [lambda, p] : dec.pairs) {
    CHECK(hs_norm(sub(p, adjoint(p))) < tol);
    CHECK(hs_norm(sub(mul(p, p), p)) < tol);
    sum = add(sum, p);
    recon = add(recon, scale(lambda, p));
  }
  for (std::size_t i = 0; i < dec.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < dec.pairs.size(); ++j) {
      CHECK(hs_norm(mul(dec.pairs[i].second, dec.pairs[j].second)) < tol);
    }
  }
  CHECK(hs_norm(sub(sum, ComplexMatrix::identity(d))) < tol);
  CHECK(hs_norm(sub(recon, u)) < tol * std::max(1.0, hs_norm(u)));
}

}  // namespace

TEST_CASE("hermitian_eigensystem on random matrices") {
  std::mt19937_64 rng(101);
  for (int d : {2, 5, 12}) {
    const ComplexMatrix a = random_hermitian(d, rng);
    const HermitianEig eig = hermitian_eigensystem(a);
    CHECK(hs_norm(sub(mul(adjoint(eig.vectors), eig.vectors),
                      ComplexMatrix::identity(d))) < 1e-12);
    for (int j = 0; j < d; ++j) {
      if (j) {
        CHECK(eig.values[j - 1] <= eig.values[j]);
      }
      double resid = 0.0;
      for (int i = 0; i < d; ++i) {
        cplx av = 0.0;
        for (int k = 0; k < d; ++k) {
          av += a.at(i, k) * eig.vectors.at(k, j);
        }
        resid += std::norm(av - eig.values[j] * eig.vectors.at(i, j));
      }
      CHECK(std::sqrt(resid) < 1e-11 * std::max(1.0, hs_norm(a)));
    }
  }
}

TEST_CASE("spectral_projectors fixtures") {
  SUBCASE("Z splits into the two computational projectors") {
    const SpectralDecomposition dec = spectral_projectors(mat_z());
    REQUIRE(dec.pairs.size() == 2);
    CHECK(std::abs(dec.pairs[0].first - cplx(-1, 0)) < 1e-12);
    CHECK(matrix_close(dec.pairs[0].second,
                       ComplexMatrix::from_rows({{0, 0}, {0, 1}})));
    CHECK(std::abs(dec.pairs[1].first - cplx(1, 0)) < 1e-12);
    CHECK(matrix_close(dec.pairs[1].second,
                       ComplexMatrix::from_rows({{1, 0}, {0, 0}})));
  }

  SUBCASE("identity is a single cluster") {
    const SpectralDecomposition dec =
        spectral_projectors(ComplexMatrix::identity(4));
    REQUIRE(dec.pairs.size() == 1);
    CHECK(std::abs(dec.pairs[0].first - cplx(1, 0)) < 1e-12);
    CHECK(matrix_close(dec.pairs[0].second, ComplexMatrix::identity(4)));
  }

  SUBCASE("Z x Z gives two rank-2 projectors, by diagonal inspection") {
    const ComplexMatrix zz = kron(mat_z(), mat_z());
    // diag(1,-1,-1,1): +1 eigenspace = |00>,|11>, -1 eigenspace = |01>,|10>
    ComplexMatrix p_plus(4), p_minus(4);
    p_plus.at(0, 0) = 1.0;
    p_plus.at(3, 3) = 1.0;
    p_minus.at(1, 1) = 1.0;
    p_minus.at(2, 2) = 1.0;

    const SpectralDecomposition dec = spectral_projectors(zz);
    REQUIRE(dec.pairs.size() == 2);
    CHECK(matrix_close(dec.pairs[0].second, p_minus));
    CHECK(matrix_close(dec.pairs[1].second, p_plus));
    check_decomposition_invariants(zz, dec);
  }

  SUBCASE("non-normal input is rejected") {
    const ComplexMatrix nilpotent = ComplexMatrix::from_rows({{0, 1}, {0, 0}});
    CHECK_THROWS_AS(spectral_projectors(nilpotent), std::invalid_argument);
  }
}

TEST_CASE("spectral invariants on random commuting constructions") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 << (rng() % 3);  // 2, 4, 8
    const ComplexMatrix v = random_unitary(d, rng);
    ComplexMatrix diag(d);
    const int order = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < d; ++i) {
      const double angle =
          2.0 * 3.14159265358979323846 * static_cast<double>(rng() % order) /
          order;
      diag.at(i, i) = cplx(std::cos(angle), std::sin(angle));
    }
    const ComplexMatrix u = conjugate_by(v, diag);
    check_decomposition_invariants(u, spectral_projectors(u));
  }
}

TEST_CASE("spectral_projectors on general Hermitian input") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix h = random_hermitian(6, rng);
    check_decomposition_invariants(h, spectral_projectors(h), 1e-10);
  }
}

TEST_CASE("joint_eigenprojectors fixtures") {
  SUBCASE("[Z x I, I x Z] refines to the four computational states") {
    const auto blocks = joint_eigenprojectors(
        {kron(mat_z(), mat_i()), kron(mat_i(), mat_z())});
    REQUIRE(blocks.size() == 4);
    for (const auto& blk : blocks) {
      CHECK(std::abs(trace(blk.projector) - cplx(1, 0)) < 1e-10);
      REQUIRE(blk.label.size() == 2);
      for (const cplx& l : blk.label) {
        CHECK(std::abs(std::abs(l.real()) - 1.0) < 1e-10);
      }
    }
  }

  SUBCASE("[Z x Z] keeps two rank-2 blocks") {
    const auto blocks = joint_eigenprojectors({kron(mat_z(), mat_z())});
    REQUIRE(blocks.size() == 2);
    CHECK(std::abs(trace(blocks[0].projector) - cplx(2, 0)) < 1e-10);
    CHECK(std::abs(trace(blocks[1].projector) - cplx(2, 0)) < 1e-10);
  }

  SUBCASE("[I] is a single full block labeled 1") {
    const auto blocks = joint_eigenprojectors({ComplexMatrix::identity(5)});
    REQUIRE(blocks.size() == 1);
    CHECK(matrix_close(blocks[0].projector, ComplexMatrix::identity(5)));
    CHECK(std::abs(blocks[0].label[0] - cplx(1, 0)) < 1e-10);
  }

  SUBCASE("commutation failure names the offending pair") {
    try {
      joint_eigenprojectors({mat_x(), mat_z()});
      FAIL("expected a commutation failure");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("0") != std::string::npos);
      CHECK(std::string(e.what()).find("1") != std::string::npos);
    }
  }
}

TEST_CASE("joint_eigenprojectors is order-insensitive up to relabeling") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 8; ++trial) {
    const int d = 4;
    const ComplexMatrix v = random_unitary(d, rng);
    std::vector<ComplexMatrix> family;
    for (int k = 0; k < 3; ++k) {
      ComplexMatrix diag(d);
      for (int i = 0; i < d; ++i) {
        const int order = 4;
        const double angle = 2.0 * 3.14159265358979323846 *
                             static_cast<double>(rng() % order) / order;
        diag.at(i, i) = cplx(std::cos(angle), std::sin(angle));
      }
      family.push_back(conjugate_by(v, diag));
    }
    const auto fwd = joint_eigenprojectors(family);
    std::vector<ComplexMatrix> reversed(family.rbegin(), family.rend());
    const auto bwd = joint_eigenprojectors(reversed);
    REQUIRE(fwd.size() == bwd.size());
    for (const auto& blk : fwd) {
      bool found = false;
      for (const auto& other : bwd) {
        if (hs_norm(sub(blk.projector, other.projector)) < 1e-8) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("is_projector and rank_of_projector") {
  ComplexMatrix p(4);
  p.at(0, 0) = 1.0;
  p.at(1, 1) = 1.0;
  CHECK(is_projector(p));
  CHECK(rank_of_projector(p) == 2);

  const ComplexMatrix half = scale(0.5, add(mat_i(), mat_z()));
  CHECK(is_projector(half));
  CHECK(rank_of_projector(half) == 1);

  CHECK_FALSE(is_projector(mat_x()));  // X^2 = I != X
  CHECK_THROWS_AS(rank_of_projector(mat_x()), std::invalid_argument);
}

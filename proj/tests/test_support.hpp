#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "ncgraph/clifford.hpp"
#include "ncgraph/complex_matrix.hpp"
#include "ncgraph/pauli.hpp"

namespace ncgtest {

using ncg::ComplexMatrix;
using ncg::cplx;

inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double symmetric_double(std::mt19937_64& rng) {
  return 2.0 * unit_double(rng) - 1.0;
}

inline cplx random_cplx(std::mt19937_64& rng) {
  return {symmetric_double(rng), symmetric_double(rng)};
}

inline ComplexMatrix random_matrix(int d, std::mt19937_64& rng) {
  ComplexMatrix m(d);
  for (auto& v : m.a) {
    v = random_cplx(rng);
  }
  return m;
}

inline ComplexMatrix random_hermitian(int d, std::mt19937_64& rng) {
  const ComplexMatrix m = random_matrix(d, rng);
  return ncg::scale(0.5, ncg::add(m, ncg::adjoint(m)));
}

// Gram-Schmidt over the columns of a random matrix; d <= 32 or so.
inline ComplexMatrix random_unitary(int d, std::mt19937_64& rng) {
  ComplexMatrix m = random_matrix(d, rng);
  for (int j = 0; j < d; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        cplx dot = 0.0;
        for (int i = 0; i < d; ++i) {
          dot += std::conj(m.at(i, k)) * m.at(i, j);
        }
        for (int i = 0; i < d; ++i) {
          m.at(i, j) -= dot * m.at(i, k);
        }
      }
    }
    double nrm = 0.0;
    for (int i = 0; i < d; ++i) {
      nrm += std::norm(m.at(i, j));
    }
    nrm = std::sqrt(nrm);
    for (int i = 0; i < d; ++i) {
      m.at(i, j) /= nrm;
    }
  }
  return m;
}

inline std::vector<ncg::CliffordGate> random_clifford_gates(
    int n, int depth, std::mt19937_64& rng) {
  std::vector<ncg::CliffordGate> gates;
  for (int step = 0; step < depth; ++step) {
    const int kind = static_cast<int>(rng() % 5);
    const int a = static_cast<int>(rng() % n);
    switch (kind) {
      case 0:
        gates.push_back({ncg::Gate::H, a});
        break;
      case 1:
        gates.push_back({ncg::Gate::S, a});
        break;
      case 2:
        gates.push_back({ncg::Gate::X, a});
        break;
      case 3:
        gates.push_back({ncg::Gate::Z, a});
        break;
      default: {
        if (n < 2) {
          gates.push_back({ncg::Gate::H, a});
          break;
        }
        int b = static_cast<int>(rng() % (n - 1));
        if (b >= a) {
          ++b;
        }
        gates.push_back({ncg::Gate::CNOT, a, b});
        break;
      }
    }
  }
  return gates;
}

inline std::vector<ncg::PauliString> z_form_generators(int n, int s) {
  std::vector<ncg::PauliString> gens;
  for (int r = 0; r < s; ++r) {
    ncg::PauliString z = ncg::PauliString::identity(n);
    z.z_bits = 1ull << r;
    gens.push_back(z);
  }
  return gens;
}

/// Random valid stabilizer group: Z-form conjugated by a random Clifford.
inline ncg::PauliGroup random_stabilizer_group(int n, int s,
                                               std::mt19937_64& rng,
                                               int depth = 0) {
  if (depth == 0) {
    depth = 4 * n + 4;
  }
  const auto gates = random_clifford_gates(n, depth, rng);
  std::vector<ncg::PauliString> gens;
  for (const auto& z : z_form_generators(n, s)) {
    gens.push_back(ncg::conjugate_pauli(gates, z));
  }
  return ncg::generate_group(n, gens);
}

inline bool matrix_close(const ComplexMatrix& a, const ComplexMatrix& b,
                         double tol = 1e-12) {
  return ncg::max_abs_diff(a, b) <= tol;
}

inline ComplexMatrix mat_i() {
  return ComplexMatrix::identity(2);
}
inline ComplexMatrix mat_x() {
  return ComplexMatrix::from_rows({{0, 1}, {1, 0}});
}
inline ComplexMatrix mat_z() {
  return ComplexMatrix::from_rows({{1, 0}, {0, -1}});
}
// the toolkit's Y convention: [[0, i], [-i, 0]]
inline ComplexMatrix mat_y() {
  return ComplexMatrix::from_rows({{0, cplx(0, 1)}, {cplx(0, -1), 0}});
}

}  // namespace ncgtest

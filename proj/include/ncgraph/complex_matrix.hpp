#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

namespace ncg {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

/// Dense square complex matrix, row-major. Value-semantic and treated as
/// immutable once built: every operation below returns a fresh matrix, so
/// instances can be shared freely across threads.
struct ComplexMatrix {
  int dim = 0;
  std::vector<cplx> a;  // dim*dim entries, a[i*dim + j]

  ComplexMatrix() = default;
  explicit ComplexMatrix(int d);

  cplx& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  const cplx& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * dim + j];
  }

  static ComplexMatrix zero(int d);
  static ComplexMatrix identity(int d);
  /// Builds from nested rows; throws on ragged or non-finite input.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cplx>> rows);
};

ComplexMatrix add(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix sub(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix scale(cplx c, const ComplexMatrix& x);
ComplexMatrix mul(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix adjoint(const ComplexMatrix& x);
/// u * m * u†
ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y);

cplx trace(const ComplexMatrix& x);
double hs_norm(const ComplexMatrix& x);
/// Hilbert-Schmidt inner product tr(x† y); conjugate-linear in x.
cplx hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);
double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y);

bool all_finite(const ComplexMatrix& x);

/// JSON form {"dim": d, "re": [[...]], "im": [[...]]}, row-major.
/// Parsing rejects ragged arrays, wrong sizes and non-finite entries.
std::string matrix_to_json(const ComplexMatrix& x);
ComplexMatrix matrix_from_json(const std::string& text);

}  // namespace ncg

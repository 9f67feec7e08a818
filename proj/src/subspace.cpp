#include "ncgraph/subspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncgraph/kernels.hpp"

namespace ncg {

OperatorSubspace OperatorSubspace::zero(int d, double tol) {
  OperatorSubspace s;
  s.ambient_dim = d;
  s.tol = tol;
  return s;
}

namespace {

std::vector<const cplx*> basis_ptrs(const std::vector<ComplexMatrix>& basis) {
  std::vector<const cplx*> ptrs;
  ptrs.reserve(basis.size());
  for (const auto& b : basis) {
    ptrs.push_back(b.a.data());
  }
  return ptrs;
}

// Two classical Gram-Schmidt passes; the second pass mops up the
// cancellation error of the first.
void project_out(const std::vector<ComplexMatrix>& basis, ComplexMatrix& v) {
  if (basis.empty()) {
    return;
  }
  const auto ptrs = basis_ptrs(basis);
  std::vector<cplx> coeff(basis.size());
  for (int pass = 0; pass < 2; ++pass) {
    kernels::hs_dots(ptrs.data(), v.a.data(), coeff.data(),
                     static_cast<int>(basis.size()), v.a.size());
    kernels::project_residual(v.a.data(), ptrs.data(), coeff.data(),
                              static_cast<int>(basis.size()), v.a.size());
  }
}

}  // namespace

OperatorSubspace orthonormalize(const std::vector<ComplexMatrix>& mats,
                                double tol) {
  if (tol <= 0.0) {
    throw std::invalid_argument("tolerance must be positive");
  }
  OperatorSubspace s;
  s.tol = tol;
  if (mats.empty()) {
    return s;
  }
  s.ambient_dim = mats.front().dim;
  double max_norm = 0.0;
  for (const auto& m : mats) {
    if (m.dim != s.ambient_dim) {
      throw std::invalid_argument("dimension mismatch in orthonormalize");
    }
    max_norm = std::max(max_norm, hs_norm(m));
  }
  for (const auto& m : mats) {
    ComplexMatrix v = m;
    project_out(s.basis, v);
    const double r = hs_norm(v);
    if (r > tol * max_norm) {
      s.basis.push_back(scale(1.0 / r, v));
    }
  }
  return s;
}

double projection_residual(const OperatorSubspace& s, const ComplexMatrix& a) {
  if (a.dim != s.ambient_dim) {
    throw std::invalid_argument("dimension mismatch in projection");
  }
  ComplexMatrix v = a;
  project_out(s.basis, v);
  return hs_norm(v);
}

bool contains(const OperatorSubspace& s, const ComplexMatrix& a, double tol) {
  const double r = projection_residual(s, a);
  return r <= tol * std::max(1.0, hs_norm(a));
}

bool subspace_equal(const OperatorSubspace& s1, const OperatorSubspace& s2,
                    double tol) {
  if (s1.ambient_dim != s2.ambient_dim) {
    throw std::invalid_argument("dimension mismatch in subspace_equal");
  }
  if (s1.rank() != s2.rank()) {
    return false;
  }
  for (const auto& b : s1.basis) {
    if (!contains(s2, b, tol)) {
      return false;
    }
  }
  for (const auto& b : s2.basis) {
    if (!contains(s1, b, tol)) {
      return false;
    }
  }
  return true;
}

}  // namespace ncg

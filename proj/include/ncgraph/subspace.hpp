#pragma once

#include <vector>

#include "ncgraph/complex_matrix.hpp"

namespace ncg {

/// A subspace of operator space, stored as a Hilbert-Schmidt-orthonormal
/// basis. ambient_dim is the Hilbert-space dimension d (basis matrices are
/// d x d, so the rank is at most d*d).
struct OperatorSubspace {
  int ambient_dim = 0;
  std::vector<ComplexMatrix> basis;
  double tol = kDefaultTol;

  int rank() const { return static_cast<int>(basis.size()); }

  static OperatorSubspace zero(int d, double tol = kDefaultTol);
};

/// Gram-Schmidt over the HS inner product (two orthogonalization passes).
/// Vectors whose residual after projection is <= tol * (largest input norm)
/// are dropped. An empty input yields the rank-0 subspace with ambient_dim 0.
OperatorSubspace orthonormalize(const std::vector<ComplexMatrix>& mats,
                                double tol = kDefaultTol);

/// Residual norm of a after projecting onto s.
double projection_residual(const OperatorSubspace& s, const ComplexMatrix& a);

/// True iff the residual of a is <= tol * max(1, ||a||_HS).
bool contains(const OperatorSubspace& s, const ComplexMatrix& a,
              double tol = kDefaultTol);

/// Equal ranks plus mutual basis membership.
bool subspace_equal(const OperatorSubspace& s1, const OperatorSubspace& s2,
                    double tol = kDefaultTol);

}  // namespace ncg

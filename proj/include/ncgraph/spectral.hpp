#pragma once

#include <utility>
#include <vector>

#include "ncgraph/complex_matrix.hpp"

namespace ncg {

inline constexpr double kDefaultClusterTol = 1e-8;
inline constexpr double kNormalityTol = 1e-8;

struct HermitianEig {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // unitary, column j pairs with values[j]
};

/// Cyclic complex Jacobi for Hermitian matrices. The input is symmetrized
/// as (a + a†)/2 before iterating.
HermitianEig hermitian_eigensystem(const ComplexMatrix& a);

struct SpectralDecomposition {
  int source_dim = 0;
  // (eigenvalue, projector), sorted by (re, im) of the eigenvalue.
  std::vector<std::pair<cplx, ComplexMatrix>> pairs;
};

/// One eigenspace as an orthonormal vector set rather than a projector.
struct EigenBlock {
  cplx eigenvalue;
  std::vector<std::vector<cplx>> vectors;
};

/// Eigenspaces of a normal matrix, eigenvalues clustered at cluster_tol.
/// Hermitian involutions (Pauli strings in particular) take a fast path with
/// projectors (I ± u)/2. Throws if u is not normal within
/// kNormalityTol * max(1, ||u||_HS).
SpectralDecomposition spectral_projectors(
    const ComplexMatrix& u, double cluster_tol = kDefaultClusterTol);

std::vector<EigenBlock> spectral_basis(const ComplexMatrix& u,
                                       double cluster_tol = kDefaultClusterTol);

struct JointBlock {
  std::vector<cplx> label;  // one scalar per input, in input order
  ComplexMatrix projector;
};

/// Minimal family of nonzero projectors on whose ranges every input acts as
/// a scalar. Starts from the full space and splits each block by the
/// spectral decomposition of each successive input restricted to it.
/// Throws when a pair of inputs fails to commute, naming the pair and the
/// commutator residual.
std::vector<JointBlock> joint_eigenprojectors(
    const std::vector<ComplexMatrix>& us,
    double cluster_tol = kDefaultClusterTol);

bool is_projector(const ComplexMatrix& p, double tol = kDefaultTol);
/// round(tr p); throws if p fails is_projector or the trace is not near an
/// integer.
int rank_of_projector(const ComplexMatrix& p, double tol = kDefaultTol);

}  // namespace ncg

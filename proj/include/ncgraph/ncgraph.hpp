#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncgraph/complex_matrix.hpp"
#include "ncgraph/subspace.hpp"

namespace ncg {

struct LabeledUnitary {
  std::string label;
  ComplexMatrix matrix;
};

/// The operator subspace span{ u m0 u† : u in the family }, kept together
/// with the family and the conjugates that span it.
struct NcGraph {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<ComplexMatrix> unitaries;
  ComplexMatrix m0;
  std::vector<ComplexMatrix> conjugates;
  OperatorSubspace space;
};

/// Checks every family member for unitarity (residual <= tol * sqrt(d)),
/// conjugates m0 and orthonormalizes the span.
NcGraph build_ncgraph(const std::vector<LabeledUnitary>& unitaries,
                      const ComplexMatrix& m0, double tol = kDefaultTol);

struct OpSystemCheck {
  bool ok = false;
  enum class Failure { none, identity_missing, adjoint_escape } failure =
      Failure::none;
  int basis_index = -1;  // offending basis element for adjoint_escape
  double residual = 0.0;
  std::string describe() const;
};

/// Unital (contains I) and adjoint-closed, checked basis-element-wise on the
/// orthonormal basis; the witness names the first failing condition.
OpSystemCheck is_operator_system(const OperatorSubspace& space,
                                 double tol = kDefaultTol);

struct AnticliqueCertificate {
  ComplexMatrix projector;
  int rank = 0;
  std::map<std::string, cplx> scalars;  // label -> c with P (u m0 u†) P = c P
  double residual = 0.0;                // worst HS residual observed
};

/// A rank >= 2 joint eigenprojector that failed scalar compression. For an
/// abelian family whose span is an operator system this cannot happen, so
/// any diagnostic signals a tolerance failure worth inspecting.
struct CounterexampleDiag {
  ComplexMatrix projector;
  int rank = 0;
  std::string worst_label;
  double residual = 0.0;
};

struct AnticliqueSearch {
  std::vector<AnticliqueCertificate> certificates;
  std::vector<CounterexampleDiag> diagnostics;
  int joint_blocks = 0;  // total joint eigenprojectors inspected
};

/// Certifies every rank >= 2 joint eigenprojector of the (abelian) family.
/// Throws if the family does not commute pairwise or the span is not an
/// operator system.
AnticliqueSearch find_anticliques(const NcGraph& graph,
                                  double tol = kDefaultTol);

struct AnticliqueVerify {
  bool ok = false;
  std::vector<cplx> lambdas;  // one per basis element of the space
  double max_residual = 0.0;
};

/// True iff P b P = lambda_b P within tol * ||P||_HS for every basis
/// element b, with lambda_b = tr(P b P)/tr(P).
AnticliqueVerify verify_anticlique(const ComplexMatrix& p,
                                   const OperatorSubspace& space,
                                   double tol = kDefaultTol);

struct KlResult {
  bool ok = false;
  std::vector<std::vector<cplx>> lambda;  // r x r, Hermitian when ok
  double max_residual = 0.0;
};

/// Knill-Laflamme check: P E_i† E_j P = lambda_ij P with lambda_ij taken as
/// tr(P E_i† E_j)/tr(P).
KlResult kl_verify(const ComplexMatrix& p,
                   const std::vector<ComplexMatrix>& errors,
                   double tol = kDefaultTol);

struct DimensionBounds {
  bool general_ok = false;    // dim_v (dim_v + 1) <= d / k
  bool commuting_ok = false;  // dim_v <= (d - k)/(k - 1); vacuous at k = 1
};

/// Known sufficient conditions for a rank-k anticlique to exist;
/// informational only. k = 1 makes the commuting bound vacuously true since
/// every rank-1 projector compresses to scalars.
DimensionBounds check_dimension_bounds(int dim_v, int d, int k);

/// True iff the family average (1/m) sum u m0 u† equals I within
/// tol * sqrt(d). The stricter normalization assumption some constructions
/// start from; purely informational here.
bool finite_average_check(const std::vector<ComplexMatrix>& unitaries,
                          const ComplexMatrix& m0, double tol = kDefaultTol);

/// Expands {"XIZ": c, ...} into sum c * matrix(letters). Keys are exactly
/// n letters from {I,X,Y,Z}, no phase prefixes.
ComplexMatrix m0_from_pauli_coeffs(int n,
                                   const std::map<std::string, cplx>& coeffs);

}  // namespace ncg

#include "ncgraph/ncgraph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ncgraph/pauli.hpp"
#include "ncgraph/spectral.hpp"

namespace ncg {

NcGraph build_ncgraph(const std::vector<LabeledUnitary>& unitaries,
                      const ComplexMatrix& m0, double tol) {
  if (unitaries.empty()) {
    throw std::invalid_argument("unitary family is empty");
  }
  NcGraph graph;
  graph.dim = m0.dim;
  const ComplexMatrix id = ComplexMatrix::identity(graph.dim);
  const double id_norm = std::sqrt(static_cast<double>(graph.dim));
  double worst = 0.0;
  std::string worst_label;
  for (const auto& lu : unitaries) {
    if (lu.matrix.dim != graph.dim) {
      throw std::invalid_argument("unitary dimension differs from m0");
    }
    const double resid = hs_norm(sub(mul(adjoint(lu.matrix), lu.matrix), id));
    if (resid > worst) {
      worst = resid;
      worst_label = lu.label;
    }
  }
  if (worst > tol * id_norm) {
    throw std::invalid_argument("family member '" + worst_label +
                                "' is not unitary (residual " +
                                std::to_string(worst) + ")");
  }
  for (const auto& lu : unitaries) {
    graph.labels.push_back(lu.label);
    graph.unitaries.push_back(lu.matrix);
    graph.conjugates.push_back(conjugate_by(lu.matrix, m0));
  }
  graph.m0 = m0;
  graph.space = orthonormalize(graph.conjugates, tol);
  return graph;
}

std::string OpSystemCheck::describe() const {
  switch (failure) {
    case Failure::none:
      return "ok";
    case Failure::identity_missing:
      return "identity missing (residual " + std::to_string(residual) + ")";
    case Failure::adjoint_escape:
      return "adjoint of basis element " + std::to_string(basis_index) +
             " escapes (residual " + std::to_string(residual) + ")";
  }
  return "?";
}

OpSystemCheck is_operator_system(const OperatorSubspace& space, double tol) {
  OpSystemCheck check;
  const ComplexMatrix id = ComplexMatrix::identity(space.ambient_dim);
  const double id_resid = projection_residual(space, id);
  if (id_resid > tol * std::max(1.0, hs_norm(id))) {
    check.failure = OpSystemCheck::Failure::identity_missing;
    check.residual = id_resid;
    return check;
  }
  for (int i = 0; i < space.rank(); ++i) {
    const double resid = projection_residual(space, adjoint(space.basis[i]));
    if (resid > tol) {  // basis elements are unit vectors
      check.failure = OpSystemCheck::Failure::adjoint_escape;
      check.basis_index = i;
      check.residual = resid;
      return check;
    }
  }
  check.ok = true;
  return check;
}

AnticliqueVerify verify_anticlique(const ComplexMatrix& p,
                                   const OperatorSubspace& space, double tol) {
  if (!is_projector(p, std::max(tol, kDefaultTol))) {
    throw std::invalid_argument("verify_anticlique: input is not a projector");
  }
  if (p.dim != space.ambient_dim) {
    throw std::invalid_argument("projector dimension differs from subspace");
  }
  AnticliqueVerify out;
  out.ok = true;
  const double trp = trace(p).real();
  const double p_norm = hs_norm(p);
  for (const auto& b : space.basis) {
    const ComplexMatrix pbp = mul(p, mul(b, p));
    const cplx lambda = trace(pbp) / trp;
    const double resid = hs_norm(sub(pbp, scale(lambda, p)));
    out.lambdas.push_back(lambda);
    out.max_residual = std::max(out.max_residual, resid);
    if (resid > tol * p_norm) {
      out.ok = false;
    }
  }
  return out;
}

AnticliqueSearch find_anticliques(const NcGraph& graph, double tol) {
  const OpSystemCheck osc = is_operator_system(graph.space, tol);
  if (!osc.ok) {
    throw std::invalid_argument("span is not an operator system: " +
                                osc.describe());
  }
  for (std::size_t i = 0; i < graph.unitaries.size(); ++i) {
    for (std::size_t j = i + 1; j < graph.unitaries.size(); ++j) {
      const double resid = hs_norm(sub(mul(graph.unitaries[i], graph.unitaries[j]),
                                       mul(graph.unitaries[j], graph.unitaries[i])));
      if (resid > kNormalityTol * static_cast<double>(graph.dim)) {
        throw std::invalid_argument("family is not abelian: '" +
                                    graph.labels[i] + "' vs '" +
                                    graph.labels[j] + "' (residual " +
                                    std::to_string(resid) + ")");
      }
    }
  }

  AnticliqueSearch result;
  const auto blocks = joint_eigenprojectors(graph.unitaries);
  result.joint_blocks = static_cast<int>(blocks.size());
  for (const auto& blk : blocks) {
    const int rank = rank_of_projector(blk.projector, std::max(tol, 1e-8));
    if (rank < 2) {
      continue;
    }
    const AnticliqueVerify va = verify_anticlique(blk.projector, graph.space, tol);
    const double trp = trace(blk.projector).real();
    const double p_norm = hs_norm(blk.projector);
    double worst = va.max_residual;
    std::string worst_label;
    std::map<std::string, cplx> scalars;
    bool ok = va.ok;
    for (std::size_t i = 0; i < graph.conjugates.size(); ++i) {
      const ComplexMatrix pvp =
          mul(blk.projector, mul(graph.conjugates[i], blk.projector));
      const cplx c = trace(pvp) / trp;
      const double resid = hs_norm(sub(pvp, scale(c, blk.projector)));
      scalars[graph.labels[i]] = c;
      if (resid > worst) {
        worst = resid;
        worst_label = graph.labels[i];
      }
      if (resid > tol * p_norm) {
        ok = false;
      }
    }
    if (ok) {
      result.certificates.push_back({blk.projector, rank, scalars, worst});
    } else {
      result.diagnostics.push_back({blk.projector, rank, worst_label, worst});
    }
  }
  return result;
}

KlResult kl_verify(const ComplexMatrix& p,
                   const std::vector<ComplexMatrix>& errors, double tol) {
  if (!is_projector(p, std::max(tol, kDefaultTol))) {
    throw std::invalid_argument("kl_verify: input is not a projector");
  }
  for (const auto& e : errors) {
    if (e.dim != p.dim) {
      throw std::invalid_argument("error operator dimension differs");
    }
  }
  KlResult out;
  out.ok = true;
  const std::size_t r = errors.size();
  const double trp = trace(p).real();
  out.lambda.assign(r, std::vector<cplx>(r, cplx(0.0, 0.0)));
  for (std::size_t i = 0; i < r; ++i) {
    const ComplexMatrix ei_adj = adjoint(errors[i]);
    for (std::size_t j = 0; j < r; ++j) {
      const ComplexMatrix prod = mul(ei_adj, errors[j]);
      const ComplexMatrix pep = mul(p, mul(prod, p));
      const cplx lambda = trace(pep) / trp;
      out.lambda[i][j] = lambda;
      const double resid = hs_norm(sub(pep, scale(lambda, p)));
      out.max_residual = std::max(out.max_residual, resid);
      if (resid > tol) {
        out.ok = false;
      }
    }
  }
  double herm = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      herm += std::norm(out.lambda[i][j] - std::conj(out.lambda[j][i]));
    }
  }
  if (std::sqrt(herm) > tol) {
    out.ok = false;
  }
  return out;
}

DimensionBounds check_dimension_bounds(int dim_v, int d, int k) {
  if (dim_v < 1 || d < 1 || k < 1) {
    throw std::invalid_argument("dimension bound arguments must be positive");
  }
  if (k > d) {
    throw std::invalid_argument("code dimension k exceeds d");
  }
  DimensionBounds out;
  const std::uint64_t v = static_cast<std::uint64_t>(dim_v);
  out.general_ok = v * (v + 1) * static_cast<std::uint64_t>(k) <=
                   static_cast<std::uint64_t>(d);
  out.commuting_ok =
      k == 1 || v * static_cast<std::uint64_t>(k - 1) <=
                    static_cast<std::uint64_t>(d - k);
  return out;
}

bool finite_average_check(const std::vector<ComplexMatrix>& unitaries,
                          const ComplexMatrix& m0, double tol) {
  if (unitaries.empty()) {
    throw std::invalid_argument("unitary family is empty");
  }
  ComplexMatrix avg(m0.dim);
  for (const auto& u : unitaries) {
    avg = add(avg, conjugate_by(u, m0));
  }
  avg = scale(1.0 / static_cast<double>(unitaries.size()), avg);
  const ComplexMatrix id = ComplexMatrix::identity(m0.dim);
  return hs_norm(sub(avg, id)) <= tol * hs_norm(id);
}

ComplexMatrix m0_from_pauli_coeffs(int n,
                                   const std::map<std::string, cplx>& coeffs) {
  ComplexMatrix m(1 << n);
  for (const auto& [letters, c] : coeffs) {
    for (char ch : letters) {
      if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z') {
        throw std::invalid_argument("coefficient key '" + letters +
                                    "' must use letters I,X,Y,Z only");
      }
    }
    const PauliString p = parse_pauli(letters, n);
    m = add(m, scale(c, to_matrix(p)));
  }
  return m;
}

}  // namespace ncg

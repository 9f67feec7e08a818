#include "ncgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ncgraph/kernels.hpp"

namespace ncg {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      if (i != j) {
        s += std::norm(a.at(i, j));
      }
    }
  }
  return std::sqrt(s);
}

}  // namespace

/*
 * Cyclic Jacobi with complex rotations. For the pivot (p, q) the 2x2 block
 * [[a_pp, b], [conj(b), a_qq]] with b = beta e^{i theta} is zeroed by the
 * unitary J: J_pp = c, J_pq = s e^{i theta}, J_qp = -s e^{-i theta},
 * J_qq = c, where t = s/c solves t^2 + 2 tau t - 1 = 0 with
 * tau = (a_qq - a_pp) / (2 beta). Converges quadratically; the off-diagonal
 * mass shrinks below 1e-13 * ||a|| in a handful of sweeps at these sizes.
 */
HermitianEig hermitian_eigensystem(const ComplexMatrix& a_in) {
  const int d = a_in.dim;
  if (d == 0) {
    return {{}, ComplexMatrix(0)};
  }
  ComplexMatrix a = scale(0.5, add(a_in, adjoint(a_in)));
  ComplexMatrix v = ComplexMatrix::identity(d);
  const double frob = std::max(hs_norm(a), 1e-300);
  const double skip = 1e-15 * frob;
  const double target = 1e-13 * frob;
  const int max_sweeps = 100;

  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiag_norm(a) <= target) {
      converged = true;
      break;
    }
    for (int p = 0; p < d - 1; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const cplx b = a.at(p, q);
        const double beta = std::abs(b);
        if (beta <= skip) {
          continue;
        }
        const cplx phase = b / beta;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double tau = (aqq - app) / (2.0 * beta);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * phase;         // J_pq
        const cplx spc = s * std::conj(phase);

        // columns: A <- A J
        for (int k = 0; k < d; ++k) {
          const cplx akp = a.at(k, p);
          const cplx akq = a.at(k, q);
          a.at(k, p) = c * akp - spc * akq;
          a.at(k, q) = sp * akp + c * akq;
        }
        // rows: A <- J† A
        for (int k = 0; k < d; ++k) {
          const cplx apk = a.at(p, k);
          const cplx aqk = a.at(q, k);
          a.at(p, k) = c * apk - sp * aqk;
          a.at(q, k) = spc * apk + c * aqk;
        }
        // keep the block exactly Hermitian
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        a.at(p, p) = cplx(a.at(p, p).real(), 0.0);
        a.at(q, q) = cplx(a.at(q, q).real(), 0.0);

        for (int k = 0; k < d; ++k) {
          const cplx vkp = v.at(k, p);
          const cplx vkq = v.at(k, q);
          v.at(k, p) = c * vkp - spc * vkq;
          v.at(k, q) = sp * vkp + c * vkq;
        }
      }
    }
  }

  if (!converged && offdiag_norm(a) > 1e-10 * frob) {
    throw std::runtime_error("Jacobi eigensolver failed to converge");
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(d);
  for (int i = 0; i < d; ++i) {
    diag[i] = a.at(i, i).real();
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return diag[i] < diag[j]; });

  HermitianEig out;
  out.values.resize(d);
  out.vectors = ComplexMatrix(d);
  for (int j = 0; j < d; ++j) {
    out.values[j] = diag[order[j]];
    for (int i = 0; i < d; ++i) {
      out.vectors.at(i, j) = v.at(i, order[j]);
    }
  }
  return out;
}

namespace {

using Vec = std::vector<cplx>;

Vec mat_vec(const ComplexMatrix& m, const Vec& v) {
  Vec out(m.dim, cplx(0.0, 0.0));
  for (int i = 0; i < m.dim; ++i) {
    cplx acc = 0.0;
    for (int j = 0; j < m.dim; ++j) {
      acc += m.at(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

cplx vdot(const Vec& a, const Vec& b) {
  return kernels::hs_dot(a.data(), b.data(), a.size());
}

double vnorm(const Vec& a) { return std::sqrt(std::abs(vdot(a, a).real())); }

void check_normal(const ComplexMatrix& u) {
  const ComplexMatrix lhs = mul(u, adjoint(u));
  const ComplexMatrix rhs = mul(adjoint(u), u);
  const double resid = hs_norm(sub(lhs, rhs));
  if (resid > kNormalityTol * std::max(1.0, hs_norm(u))) {
    throw std::invalid_argument("matrix is not normal (commutator residual " +
                                std::to_string(resid) + ")");
  }
}

bool hermitian_involution(const ComplexMatrix& u) {
  const double scale_n = std::max(1.0, hs_norm(u));
  if (hs_norm(sub(u, adjoint(u))) > 1e-12 * scale_n) {
    return false;
  }
  const ComplexMatrix sq = mul(u, u);
  return hs_norm(sub(sq, ComplexMatrix::identity(u.dim))) <= 1e-12 * scale_n;
}

// Orthonormal basis of the range of an (exact) projector, from its columns.
std::vector<Vec> projector_range(const ComplexMatrix& p, int expected_rank) {
  std::vector<Vec> basis;
  for (int j = 0; j < p.dim && static_cast<int>(basis.size()) < expected_rank;
       ++j) {
    Vec v(p.dim);
    for (int i = 0; i < p.dim; ++i) {
      v[i] = p.at(i, j);
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const cplx c = vdot(b, v);
        for (int i = 0; i < p.dim; ++i) {
          v[i] -= c * b[i];
        }
      }
    }
    const double r = vnorm(v);
    if (r > 1e-8) {
      for (auto& e : v) {
        e /= r;
      }
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

ComplexMatrix projector_from_vectors(int d, const std::vector<Vec>& vs) {
  ComplexMatrix p(d);
  for (const auto& v : vs) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        p.at(i, j) += v[i] * std::conj(v[j]);
      }
    }
  }
  return p;
}

// Cluster complex values: greedy union by distance <= tol, deterministic.
std::vector<std::vector<int>> cluster_values(const std::vector<cplx>& vals,
                                             double tol) {
  const int m = static_cast<int>(vals.size());
  std::vector<int> root(m);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int i) {
    while (root[i] != i) {
      root[i] = root[root[i]];
      i = root[i];
    }
    return i;
  };
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (std::abs(vals[i] - vals[j]) <= tol) {
        root[find(j)] = find(i);
      }
    }
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> group_of(m, -1);
  for (int i = 0; i < m; ++i) {
    const int r = find(i);
    if (group_of[r] < 0) {
      group_of[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(i);
  }
  return groups;
}

std::vector<EigenBlock> general_spectral_basis(const ComplexMatrix& u,
                                               double cluster_tol) {
  const int d = u.dim;
  const ComplexMatrix ua = adjoint(u);
  const ComplexMatrix re = scale(0.5, add(u, ua));
  const ComplexMatrix im = scale(cplx(0.0, -0.5), sub(u, ua));

  const HermitianEig eig_re = hermitian_eigensystem(re);

  // Group the Hermitian-part eigenvalues, then split each group by the
  // anti-Hermitian part restricted to it.
  std::vector<Vec> vectors;
  std::vector<cplx> values;
  int start = 0;
  while (start < d) {
    int stop = start + 1;
    while (stop < d &&
           eig_re.values[stop] - eig_re.values[stop - 1] <= cluster_tol) {
      ++stop;
    }
    const int k = stop - start;
    std::vector<Vec> q(k, Vec(d));
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < d; ++i) {
        q[j][i] = eig_re.vectors.at(i, start + j);
      }
    }
    ComplexMatrix w(k);
    std::vector<Vec> imq(k);
    for (int j = 0; j < k; ++j) {
      imq[j] = mat_vec(im, q[j]);
    }
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        w.at(i, j) = vdot(q[i], imq[j]);
      }
    }
    const HermitianEig eig_im = hermitian_eigensystem(w);
    for (int j = 0; j < k; ++j) {
      Vec lifted(d, cplx(0.0, 0.0));
      for (int b = 0; b < k; ++b) {
        const cplx coeff = eig_im.vectors.at(b, j);
        for (int i = 0; i < d; ++i) {
          lifted[i] += coeff * q[b][i];
        }
      }
      const Vec ulift = mat_vec(u, lifted);
      values.push_back(vdot(lifted, ulift));
      vectors.push_back(std::move(lifted));
    }
    start = stop;
  }

  const auto groups = cluster_values(values, cluster_tol);
  std::vector<EigenBlock> blocks;
  for (const auto& g : groups) {
    EigenBlock blk;
    cplx mean = 0.0;
    for (int idx : g) {
      mean += values[idx];
      blk.vectors.push_back(vectors[idx]);
    }
    blk.eigenvalue = mean / static_cast<double>(g.size());
    blocks.push_back(std::move(blk));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const EigenBlock& a, const EigenBlock& b) {
              if (a.eigenvalue.real() != b.eigenvalue.real()) {
                return a.eigenvalue.real() < b.eigenvalue.real();
              }
              return a.eigenvalue.imag() < b.eigenvalue.imag();
            });
  return blocks;
}

}  // namespace

std::vector<EigenBlock> spectral_basis(const ComplexMatrix& u,
                                       double cluster_tol) {
  check_normal(u);
  if (hermitian_involution(u)) {
    const int d = u.dim;
    const ComplexMatrix id = ComplexMatrix::identity(d);
    std::vector<EigenBlock> blocks;
    const double tr = trace(u).real();
    const int rank_minus = static_cast<int>(std::lround((d - tr) / 2.0));
    const int rank_plus = d - rank_minus;
    bool ok = true;
    if (rank_minus > 0) {
      EigenBlock blk;
      blk.eigenvalue = -1.0;
      blk.vectors = projector_range(scale(0.5, sub(id, u)), rank_minus);
      ok = ok && static_cast<int>(blk.vectors.size()) == rank_minus;
      blocks.push_back(std::move(blk));
    }
    if (rank_plus > 0) {
      EigenBlock blk;
      blk.eigenvalue = 1.0;
      blk.vectors = projector_range(scale(0.5, add(id, u)), rank_plus);
      ok = ok && static_cast<int>(blk.vectors.size()) == rank_plus;
      blocks.push_back(std::move(blk));
    }
    if (ok) {
      return blocks;
    }
    // fall through on a rank extraction hiccup
  }
  return general_spectral_basis(u, cluster_tol);
}

SpectralDecomposition spectral_projectors(const ComplexMatrix& u,
                                          double cluster_tol) {
  check_normal(u);
  SpectralDecomposition out;
  out.source_dim = u.dim;
  if (hermitian_involution(u)) {
    const ComplexMatrix id = ComplexMatrix::identity(u.dim);
    const ComplexMatrix pm = scale(0.5, sub(id, u));
    const ComplexMatrix pp = scale(0.5, add(id, u));
    if (hs_norm(pm) > 1e-9) {
      out.pairs.emplace_back(cplx(-1.0, 0.0), pm);
    }
    if (hs_norm(pp) > 1e-9) {
      out.pairs.emplace_back(cplx(1.0, 0.0), pp);
    }
    return out;
  }
  for (const auto& blk : general_spectral_basis(u, cluster_tol)) {
    out.pairs.emplace_back(blk.eigenvalue,
                           projector_from_vectors(u.dim, blk.vectors));
  }
  return out;
}

std::vector<JointBlock> joint_eigenprojectors(
    const std::vector<ComplexMatrix>& us, double cluster_tol) {
  if (us.empty()) {
    throw std::invalid_argument("joint_eigenprojectors needs at least one matrix");
  }
  const int d = us.front().dim;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (us[i].dim != d) {
      throw std::invalid_argument("dimension mismatch in unitary family");
    }
  }
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      const double resid =
          hs_norm(sub(mul(us[i], us[j]), mul(us[j], us[i])));
      const double scale_n =
          std::max(1.0, hs_norm(us[i]) * hs_norm(us[j]));
      if (resid > kNormalityTol * scale_n) {
        throw std::invalid_argument(
            "matrices " + std::to_string(i) + " and " + std::to_string(j) +
            " do not commute (residual " + std::to_string(resid) + ")");
      }
    }
  }
  for (const auto& u : us) {
    check_normal(u);
  }

  struct Block {
    std::vector<cplx> label;
    std::vector<Vec> vectors;
  };
  std::vector<Block> blocks(1);
  blocks[0].vectors.resize(d, Vec(d, cplx(0.0, 0.0)));
  for (int i = 0; i < d; ++i) {
    blocks[0].vectors[i][i] = 1.0;
  }

  for (const auto& u : us) {
    std::vector<Block> next;
    for (auto& blk : blocks) {
      const int k = static_cast<int>(blk.vectors.size());
      ComplexMatrix w(k);
      std::vector<Vec> uv(k);
      for (int j = 0; j < k; ++j) {
        uv[j] = mat_vec(u, blk.vectors[j]);
      }
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          w.at(i, j) = vdot(blk.vectors[i], uv[j]);
        }
      }
      for (const auto& sub_blk : spectral_basis(w, cluster_tol)) {
        Block nb;
        nb.label = blk.label;
        nb.label.push_back(sub_blk.eigenvalue);
        for (const auto& wv : sub_blk.vectors) {
          Vec lifted(d, cplx(0.0, 0.0));
          for (int b = 0; b < k; ++b) {
            for (int i = 0; i < d; ++i) {
              lifted[i] += wv[b] * blk.vectors[b][i];
            }
          }
          nb.vectors.push_back(std::move(lifted));
        }
        next.push_back(std::move(nb));
      }
    }
    blocks = std::move(next);
  }

  std::vector<JointBlock> out;
  out.reserve(blocks.size());
  for (const auto& blk : blocks) {
    out.push_back({blk.label, projector_from_vectors(d, blk.vectors)});
  }
  return out;
}

bool is_projector(const ComplexMatrix& p, double tol) {
  const double scale_n = std::max(1.0, hs_norm(p));
  if (hs_norm(sub(p, adjoint(p))) > tol * scale_n) {
    return false;
  }
  if (hs_norm(sub(mul(p, p), p)) > tol * scale_n) {
    return false;
  }
  const cplx tr = trace(p);
  return std::abs(tr.imag()) <= tol &&
         std::abs(tr.real() - std::lround(tr.real())) <= tol;
}

int rank_of_projector(const ComplexMatrix& p, double tol) {
  if (!is_projector(p, tol)) {
    throw std::invalid_argument("matrix is not a projector within tolerance");
  }
  return static_cast<int>(std::lround(trace(p).real()));
}

}  // namespace ncg

#pragma once

#include <complex>
#include <cstddef>

namespace ncg::kernels {

using cplx = std::complex<double>;

// Serial reference implementations, kept for testing and benchmarking.
// The OpenMP versions below must agree with these bit for bit.
namespace ref {

void matmul(const cplx* a, const cplx* b, cplx* c, int d);
// c = a† · b
void matmul_adj_l(const cplx* a, const cplx* b, cplx* c, int d);
// c = a · b†
void matmul_adj_r(const cplx* a, const cplx* b, cplx* c, int d);
// out[k] = sum_e conj(basis[k][e]) * v[e]
void hs_dots(const cplx* const* basis, const cplx* v, cplx* out, int nb,
             std::size_t len);
// v[e] -= sum_k coeff[k] * basis[k][e]
void project_residual(cplx* v, const cplx* const* basis, const cplx* coeff,
                      int nb, std::size_t len);

}  // namespace ref

// OpenMP versions. Each loop iteration owns one output entry, so the
// per-entry summation order does not depend on the thread count; results
// are identical to ref:: for any OMP_NUM_THREADS.
void matmul(const cplx* a, const cplx* b, cplx* c, int d);
void matmul_adj_l(const cplx* a, const cplx* b, cplx* c, int d);
void matmul_adj_r(const cplx* a, const cplx* b, cplx* c, int d);
void hs_dots(const cplx* const* basis, const cplx* v, cplx* out, int nb,
             std::size_t len);
void project_residual(cplx* v, const cplx* const* basis, const cplx* coeff,
                      int nb, std::size_t len);

cplx hs_dot(const cplx* a, const cplx* b, std::size_t len);

}  // namespace ncg::kernels

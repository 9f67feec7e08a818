#include "ncgraph/kernels.hpp"

namespace ncg::kernels {

namespace {
// Below this dimension the parallel-region overhead dominates.
constexpr int kParallelDim = 32;
constexpr std::size_t kParallelLen = 1024;
}  // namespace

namespace ref {

void matmul(const cplx* a, const cplx* b, cplx* c, int d) {
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < d; ++k) {
        acc += a[i * d + k] * b[k * d + j];
      }
      c[i * d + j] = acc;
    }
  }
}

void matmul_adj_l(const cplx* a, const cplx* b, cplx* c, int d) {
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < d; ++k) {
        acc += std::conj(a[k * d + i]) * b[k * d + j];
      }
      c[i * d + j] = acc;
    }
  }
}

void matmul_adj_r(const cplx* a, const cplx* b, cplx* c, int d) {
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < d; ++k) {
        acc += a[i * d + k] * std::conj(b[j * d + k]);
      }
      c[i * d + j] = acc;
    }
  }
}

void hs_dots(const cplx* const* basis, const cplx* v, cplx* out, int nb,
             std::size_t len) {
  for (int k = 0; k < nb; ++k) {
    out[k] = hs_dot(basis[k], v, len);
  }
}

void project_residual(cplx* v, const cplx* const* basis, const cplx* coeff,
                      int nb, std::size_t len) {
  for (std::size_t e = 0; e < len; ++e) {
    cplx acc = v[e];
    for (int k = 0; k < nb; ++k) {
      acc -= coeff[k] * basis[k][e];
    }
    v[e] = acc;
  }
}

}  // namespace ref

void matmul(const cplx* a, const cplx* b, cplx* c, int d) {
#pragma omp parallel for schedule(static) if (d >= kParallelDim)
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < d; ++k) {
        acc += a[i * d + k] * b[k * d + j];
      }
      c[i * d + j] = acc;
    }
  }
}

void matmul_adj_l(const cplx* a, const cplx* b, cplx* c, int d) {
#pragma omp parallel for schedule(static) if (d >= kParallelDim)
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < d; ++k) {
        acc += std::conj(a[k * d + i]) * b[k * d + j];
      }
      c[i * d + j] = acc;
    }
  }
}

void matmul_adj_r(const cplx* a, const cplx* b, cplx* c, int d) {
#pragma omp parallel for schedule(static) if (d >= kParallelDim)
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < d; ++k) {
        acc += a[i * d + k] * std::conj(b[j * d + k]);
      }
      c[i * d + j] = acc;
    }
  }
}

void hs_dots(const cplx* const* basis, const cplx* v, cplx* out, int nb,
             std::size_t len) {
#pragma omp parallel for schedule(static) if (nb >= 8 && len >= kParallelLen)
  for (int k = 0; k < nb; ++k) {
    out[k] = hs_dot(basis[k], v, len);
  }
}

void project_residual(cplx* v, const cplx* const* basis, const cplx* coeff,
                      int nb, std::size_t len) {
#pragma omp parallel for schedule(static) if (len >= kParallelLen)
  for (std::size_t e = 0; e < len; ++e) {
    cplx acc = v[e];
    for (int k = 0; k < nb; ++k) {
      acc -= coeff[k] * basis[k][e];
    }
    v[e] = acc;
  }
}

cplx hs_dot(const cplx* a, const cplx* b, std::size_t len) {
  cplx acc = 0.0;
  for (std::size_t e = 0; e < len; ++e) {
    acc += std::conj(a[e]) * b[e];
  }
  return acc;
}

}  // namespace ncg::kernels

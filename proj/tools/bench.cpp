// Times the OpenMP kernels against the serial reference implementations and
// reports the speedup plus the worst absolute deviation between the two.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ncgraph/kernels.hpp"

namespace {

using ncg::kernels::cplx;
using Clock = std::chrono::steady_clock;

std::vector<cplx> random_matrix(int d, std::mt19937_64& rng) {
  std::vector<cplx> m(static_cast<std::size_t>(d) * d);
  for (auto& v : m) {
    const double re = static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
    const double im = static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
    v = cplx(re, im);
  }
  return m;
}

template <typename F>
double time_ms(int reps, F&& f) {
  const auto start = Clock::now();
  for (int r = 0; r < reps; ++r) {
    f();
  }
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() /
         reps;
}

double max_dev(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

void bench_matmul(int d, int reps) {
  std::mt19937_64 rng(12345);
  const auto a = random_matrix(d, rng);
  const auto b = random_matrix(d, rng);
  std::vector<cplx> c_ref(a.size()), c_omp(a.size());

  const double t_ref = time_ms(
      reps, [&] { ncg::kernels::ref::matmul(a.data(), b.data(), c_ref.data(), d); });
  const double t_omp = time_ms(
      reps, [&] { ncg::kernels::matmul(a.data(), b.data(), c_omp.data(), d); });
  std::printf("matmul        d=%4d   ref %9.3f ms   omp %9.3f ms   x%.2f   dev %.3g\n",
              d, t_ref, t_omp, t_ref / t_omp, max_dev(c_ref, c_omp));
}

void bench_project(int d, int nb, int reps) {
  std::mt19937_64 rng(54321);
  const std::size_t len = static_cast<std::size_t>(d) * d;
  std::vector<std::vector<cplx>> basis;
  for (int k = 0; k < nb; ++k) {
    basis.push_back(random_matrix(d, rng));
  }
  std::vector<const cplx*> ptrs;
  for (const auto& bvec : basis) {
    ptrs.push_back(bvec.data());
  }
  const auto v0 = random_matrix(d, rng);
  std::vector<cplx> coeff(nb);
  ncg::kernels::ref::hs_dots(ptrs.data(), v0.data(), coeff.data(), nb, len);

  std::vector<cplx> v_ref, v_omp;
  const double t_ref = time_ms(reps, [&] {
    v_ref = v0;
    ncg::kernels::ref::project_residual(v_ref.data(), ptrs.data(),
                                        coeff.data(), nb, len);
  });
  const double t_omp = time_ms(reps, [&] {
    v_omp = v0;
    ncg::kernels::project_residual(v_omp.data(), ptrs.data(), coeff.data(),
                                   nb, len);
  });
  std::printf("project       d=%4d nb=%3d ref %9.3f ms   omp %9.3f ms   x%.2f   dev %.3g\n",
              d, nb, t_ref, t_omp, t_ref / t_omp, max_dev(v_ref, v_omp));
}

}  // namespace

int main(int argc, char** argv) {
  const bool smoke = argc > 1 && std::strcmp(argv[1], "--smoke") == 0;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  if (smoke) {
    bench_matmul(64, 3);
    bench_project(32, 16, 3);
    return 0;
  }
  for (int d : {64, 128, 256, 512}) {
    bench_matmul(d, d <= 128 ? 20 : 5);
  }
  for (int d : {64, 128}) {
    bench_project(d, 64, 10);
  }
  return 0;
}

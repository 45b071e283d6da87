#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "sp4/kernels.hpp"
#include "sp4/linalg.hpp"
#include "sp4/transfer.hpp"

// Times the OpenMP kernels against their serial reference, plus one
// end-to-end transfer-matrix build at the largest supported chain length.

namespace {

using sp4::cplx;
using sp4::CMatrix;

CMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ur(-1.0, 1.0);
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx(ur(rng), ur(rng));
  return m;
}

template <typename F>
double time_ms(F&& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  std::mt19937_64 rng(42);

  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");
  for (std::size_t n : {128, 256, 512, 1024}) {
    CMatrix a = random_matrix(n, rng), b = random_matrix(n, rng), c(n, n);
    double ts = time_ms(
        [&] { sp4::kernels::matmul_serial(a.data(), b.data(), c.data(), n, n, n); },
        n <= 256 ? 5 : 2);
    double tp = time_ms(
        [&] { sp4::kernels::matmul_omp(a.data(), b.data(), c.data(), n, n, n); },
        n <= 256 ? 5 : 2);
    std::printf("matmul %4zu x %-14zu %10.2f %10.2f %7.2fx\n", n, n, ts, tp, ts / tp);
  }
  for (std::size_t n : {32, 64}) {
    CMatrix a = random_matrix(n, rng), b = random_matrix(n, rng);
    CMatrix c(n * n, n * n);
    double ts = time_ms(
        [&] { sp4::kernels::kron_serial(a.data(), b.data(), c.data(), n, n, n, n); }, 10);
    double tp = time_ms(
        [&] { sp4::kernels::kron_omp(a.data(), b.data(), c.data(), n, n, n, n); }, 10);
    std::printf("kron   %4zu x %-14zu %10.2f %10.2f %7.2fx\n", n, n, ts, tp, ts / tp);
  }

  // end-to-end: periodic transfer matrix at N = 4 (aux dim 4, 1024-dim total)
  sp4::transfer::ChainSpec spec;
  spec.n_sites = 4;
  spec.theta = {cplx(0.31), cplx(-0.47), cplx(0.12), cplx(-0.83)};
  for (bool par : {false, true}) {
    sp4::kernels::set_parallel(par);
    double t = time_ms([&] { sp4::transfer::t_periodic(cplx(0.7, 0.2), spec); }, 1);
    std::printf("t_p build N=4 (%s)        %10.2f ms\n", par ? "omp   " : "serial", t);
  }
  sp4::kernels::set_parallel(true);
  return 0;
}

#include "sp4/kernels.hpp"

#include <atomic>
#include <cstring>

namespace sp4::kernels {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

// i-k-j loop order so the inner loop streams through contiguous rows of b and c.
void matmul_serial(const cplx* a, const cplx* b, cplx* c,
                   std::size_t m, std::size_t k, std::size_t n) {
  std::memset(c, 0, sizeof(cplx) * m * n);
  for (std::size_t i = 0; i < m; ++i) {
    cplx* ci = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx(0.0, 0.0)) continue;
      const cplx* bp = b + p * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += aip * bp[j];
    }
  }
}

void matmul_omp(const cplx* a, const cplx* b, cplx* c,
                std::size_t m, std::size_t k, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < m; ++i) {
    cplx* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = cplx(0.0, 0.0);
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx(0.0, 0.0)) continue;
      const cplx* bp = b + p * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += aip * bp[j];
    }
  }
}

void kron_serial(const cplx* a, const cplx* b, cplx* c,
                 std::size_t ra, std::size_t ca, std::size_t rb, std::size_t cb) {
  const std::size_t cols = ca * cb;
  for (std::size_t ia = 0; ia < ra; ++ia)
    for (std::size_t ib = 0; ib < rb; ++ib) {
      cplx* crow = c + (ia * rb + ib) * cols;
      const cplx* brow = b + ib * cb;
      for (std::size_t ja = 0; ja < ca; ++ja) {
        const cplx av = a[ia * ca + ja];
        cplx* dst = crow + ja * cb;
        for (std::size_t jb = 0; jb < cb; ++jb) dst[jb] = av * brow[jb];
      }
    }
}

void kron_omp(const cplx* a, const cplx* b, cplx* c,
              std::size_t ra, std::size_t ca, std::size_t rb, std::size_t cb) {
  const std::size_t cols = ca * cb;
#pragma omp parallel for collapse(2) schedule(static)
  for (std::size_t ia = 0; ia < ra; ++ia)
    for (std::size_t ib = 0; ib < rb; ++ib) {
      cplx* crow = c + (ia * rb + ib) * cols;
      const cplx* brow = b + ib * cb;
      for (std::size_t ja = 0; ja < ca; ++ja) {
        const cplx av = a[ia * ca + ja];
        cplx* dst = crow + ja * cb;
        for (std::size_t jb = 0; jb < cb; ++jb) dst[jb] = av * brow[jb];
      }
    }
}

void matmul(const cplx* a, const cplx* b, cplx* c,
            std::size_t m, std::size_t k, std::size_t n) {
#ifdef _OPENMP
  if (parallel_enabled() && m * n >= 4096) {
    matmul_omp(a, b, c, m, k, n);
    return;
  }
#endif
  matmul_serial(a, b, c, m, k, n);
}

void kron(const cplx* a, const cplx* b, cplx* c,
          std::size_t ra, std::size_t ca, std::size_t rb, std::size_t cb) {
#ifdef _OPENMP
  if (parallel_enabled() && ra * rb * ca * cb >= 65536) {
    kron_omp(a, b, c, ra, ca, rb, cb);
    return;
  }
#endif
  kron_serial(a, b, c, ra, ca, rb, cb);
}

}  // namespace sp4::kernels

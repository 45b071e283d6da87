#ifndef SP4_KERNELS_HPP
#define SP4_KERNELS_HPP

#include <complex>
#include <cstddef>

// Low-level dense kernels. Each kernel has an OpenMP-parallel version and a
// serial reference version; the serial ones are kept as oracles for the tests
// and for the bench tool. All matrices are row-major, complex<double>.

namespace sp4::kernels {

using cplx = std::complex<double>;

// c = a (m x k) * b (k x n), row-major, c preallocated (m x n).
void matmul_serial(const cplx* a, const cplx* b, cplx* c,
                   std::size_t m, std::size_t k, std::size_t n);
void matmul_omp(const cplx* a, const cplx* b, cplx* c,
                std::size_t m, std::size_t k, std::size_t n);

// c = kron(a, b) with a (ra x ca), b (rb x cb); c preallocated (ra*rb x ca*cb).
void kron_serial(const cplx* a, const cplx* b, cplx* c,
                 std::size_t ra, std::size_t ca, std::size_t rb, std::size_t cb);
void kron_omp(const cplx* a, const cplx* b, cplx* c,
              std::size_t ra, std::size_t ca, std::size_t rb, std::size_t cb);

// Global switch consulted by the dispatching wrappers in linalg.hpp.
// Parallel by default when compiled with OpenMP.
bool parallel_enabled();
void set_parallel(bool on);

void matmul(const cplx* a, const cplx* b, cplx* c,
            std::size_t m, std::size_t k, std::size_t n);
void kron(const cplx* a, const cplx* b, cplx* c,
          std::size_t ra, std::size_t ca, std::size_t rb, std::size_t cb);

}  // namespace sp4::kernels

#endif

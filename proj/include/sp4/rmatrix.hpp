#ifndef SP4_RMATRIX_HPP
#define SP4_RMATRIX_HPP

#include "sp4/linalg.hpp"

// The sp(4)-invariant fundamental R-matrix on V (x) V with dim V = 4,
// its six weight functions and the defining property checks.

namespace sp4::rmatrix {

// weight functions
inline cplx wa(cplx u) { return (u + 1.0) * (u + 3.0); }
inline cplx wb(cplx u) { return u * (u + 3.0); }
inline cplx wc(cplx u) { return 2.0 * u + 3.0; }
inline cplx wd(cplx u) { return -u; }
inline cplx we(cplx u) { return u * (u + 2.0); }
inline cplx wg(cplx u) { return u + 3.0; }
inline cplx rho1(cplx u) { return wa(u) * wa(-u); }
inline cplx rho0_tilde(cplx u) { return (u - 1.0) * (u + 3.0); }

// index conventions on {1,2,3,4}
inline int bar(int i) { return 5 - i; }
inline int xi(int i) { return (i == 1 || i == 2) ? 1 : -1; }

/// 16x16 R(u); basis |i>|j> -> row 4(i-1)+(j-1).
CMatrix R(cplx u);

/// R_21(u) = P R(u) P.
CMatrix R21(cplx u);

/// QYBE residual on the 64-dim triple space.
double check_qybe(cplx u, cplx v);

/// ||R12(u) R21(-u) - rho1(u) Id|| / (1 + |rho1(u)|)
double check_unitarity(cplx u);

/// crossing-unitarity residual with partial transpose on the first factor
/// and shift u -> -u-6.
double check_crossing(cplx u);

}  // namespace sp4::rmatrix

#endif

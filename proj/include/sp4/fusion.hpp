#ifndef SP4_FUSION_HPP
#define SP4_FUSION_HPP

#include <utility>

#include "sp4/linalg.hpp"

// Fusion projectors of the sp(4) R-matrix, the fused 5-dim Rbar-matrix and
// the second fusion back to the fundamental representation.

namespace sp4::fusion {

struct Projector {
  std::size_t dim_ambient = 0;
  std::size_t rank = 0;
  CMatrix basis;   // dim_ambient x rank, orthonormal columns, frozen order
  CMatrix matrix;  // sum |psi_i><psi_i|
};

/// Rank-1 projector on V(x)V spanned by (|14>+|23>-|32>-|41>)/2.
const Projector& P1();

/// Rank-5 projector on V(x)V (antisymmetric fused sector), basis frozen in
/// the order psi5_1..psi5_5.
const Projector& P5();

/// Rank-4 projector on the 20-dim fused(x)fundamental space, basis frozen in
/// the order psi4_1..psi4_4.
const Projector& P4();

/// 4x20 isometry mapping |psi4_i> -> |i|.
const CMatrix& correspondence();

enum class Orientation { left, right };

/// Fused 20x20 Rbar built from the projected double product. `left` acts on
/// fused(x)fundamental (5(x)4), `right` on fundamental(x)fused (4(x)5).
/// Throws std::domain_error at the normalizer zeros u in {-3/2, 1/2, -7/2}.
CMatrix fuse_R5(cplx u, Orientation o);

/// Degree-1 pencil evaluation of the fused Rbar (polynomial continuation;
/// defined for every u, including the normalizer zeros).
CMatrix rbar_left(cplx u);
CMatrix rbar_right(cplx u);

/// rbar_right conjugated into the fused-first (5(x)4) ordering.
CMatrix rbar_right_on54(cplx u);

/// Second fusion to the fundamental representation; contract: equals R(u).
/// Throws std::domain_error at u = -5.
CMatrix fuse_back(cplx u);

/// Mirrored form; contract: equals R21(u).
CMatrix fuse_back_mirror(cplx u);

/// Residuals of the two one-dimensional fusion identities
/// P1 R23(u) R13(u-3) P1 = a(u) e(u-3) P1 (and the mirrored form).
std::pair<double, double> check_fusion_scalar_identities(cplx u);

/// || Rbar_{12}(u) Rbar_{21}(-u) + (u+5/2)(u-5/2) Id || normalized.
double check_rbar_unitarity(cplx u);

/// Fused crossing with the transpose taken on the 5-dim fused factor:
/// Rbar_{12}(u)^{t1} Rbar_{21}(-u-6)^{t1} = -(u+1/2)(u+11/2).
double check_rbar_crossing(cplx u);

/// Mixed Yang-Baxter on the 80-dim space (fused aux first).
double check_mixed_ybe(cplx u, cplx v);

}  // namespace sp4::fusion

#endif

#include "sp4/boundary.hpp"

#include <cmath>

#include "sp4/fusion.hpp"
#include "sp4/rmatrix.hpp"

namespace sp4::boundary {

namespace {
const CMatrix& I4() {
  static const CMatrix m = CMatrix::identity(4);
  return m;
}
const CMatrix& I5() {
  static const CMatrix m = CMatrix::identity(5);
  return m;
}

// quadratic pencil through three safe sample points
struct Pencil2 {
  CMatrix c0, c1, c2;
  CMatrix at(cplx u) const { return c0 + u * c1 + (u * u) * c2; }
};

Pencil2 make_kbar_pencil(const BoundaryParams& p, Sign s) {
  const cplx u0(0.9), u1(-0.3), u2(2.1);
  CMatrix m0 = fuse_K5(u0, p, s), m1 = fuse_K5(u1, p, s), m2 = fuse_K5(u2, p, s);
  // Lagrange in coefficient form
  auto scale = [](cplx w, const CMatrix& m) { return w * m; };
  const cplx d0 = (u0 - u1) * (u0 - u2), d1 = (u1 - u0) * (u1 - u2),
             d2 = (u2 - u0) * (u2 - u1);
  Pencil2 q;
  q.c2 = scale(1.0 / d0, m0) + scale(1.0 / d1, m1) + scale(1.0 / d2, m2);
  q.c1 = scale(-(u1 + u2) / d0, m0) + scale(-(u0 + u2) / d1, m1) +
         scale(-(u0 + u1) / d2, m2);
  q.c0 = scale(u1 * u2 / d0, m0) + scale(u0 * u2 / d1, m1) +
         scale(u0 * u1 / d2, m2);
  return q;
}
}  // namespace

void BoundaryParams::validate() const {
  if (std::abs(1.0 + c1 * c2) < 1e-12)
    throw std::invalid_argument("BoundaryParams: 1 + c1 c2 vanishes");
  if (std::abs(1.0 + c1_t * c2_t) < 1e-12)
    throw std::invalid_argument("BoundaryParams: 1 + c1~ c2~ vanishes");
}

CMatrix m_matrix(cplx c1, cplx c2) {
  CMatrix m(4, 4);
  m(0, 0) = -1.0;
  m(1, 1) = -1.0;
  m(2, 2) = 1.0;
  m(3, 3) = 1.0;
  m(0, 2) = c1;
  m(1, 3) = c1;
  m(2, 0) = c2;
  m(3, 1) = c2;
  return m;
}

CMatrix K_minus(cplx u, const BoundaryParams& p) {
  return p.zeta * I4() + u * m_matrix(p.c1, p.c2);
}

CMatrix K_plus(cplx u, const BoundaryParams& p) {
  return p.zeta_t * I4() + (-u - 3.0) * m_matrix(p.c1_t, p.c2_t);
}

cplx h(cplx u, const BoundaryParams& p) {
  return 4.0 * ((1.0 + p.c1 * p.c2) * u * u - p.zeta * p.zeta);
}
cplx h_tilde(cplx u, const BoundaryParams& p) {
  return 4.0 * ((1.0 + p.c1_t * p.c2_t) * u * u - p.zeta_t * p.zeta_t);
}
cplx h1(cplx u, const BoundaryParams& p) {
  return 2.0 * (std::sqrt(1.0 + p.c1 * p.c2) * u + p.zeta);
}
cplx h2(cplx u, const BoundaryParams& p) {
  return 2.0 * (std::sqrt(1.0 + p.c1 * p.c2) * u - p.zeta);
}
cplx h1_tilde(cplx u, const BoundaryParams& p) {
  return -2.0 * (std::sqrt(1.0 + p.c1_t * p.c2_t) * u - p.zeta_t);
}
cplx h2_tilde(cplx u, const BoundaryParams& p) {
  return -2.0 * (std::sqrt(1.0 + p.c1_t * p.c2_t) * u + p.zeta_t);
}

cplx x_const(const BoundaryParams& p) {
  p.validate();
  const cplx rad = (1.0 + p.c1 * p.c2) * (1.0 + p.c1_t * p.c2_t);
  return (2.0 + p.c1 * p.c2_t + p.c2 * p.c1_t) / std::sqrt(rad) - 2.0;
}

double check_RE(cplx u, cplx v, const BoundaryParams& p) {
  using rmatrix::R;
  using rmatrix::R21;
  CMatrix k1u = kron(K_minus(u, p), I4());
  CMatrix k2v = kron(I4(), K_minus(v, p));
  CMatrix lhs = R(u - v) * k1u * R21(u + v) * k2v;
  CMatrix rhs = k2v * R(u + v) * k1u * R21(u - v);
  return (lhs - rhs).frobenius_norm() / (1.0 + lhs.frobenius_norm());
}

double check_dual_RE(cplx u, cplx v, const BoundaryParams& p) {
  using rmatrix::R;
  using rmatrix::R21;
  CMatrix k1u = kron(K_plus(u, p), I4());
  CMatrix k2v = kron(I4(), K_plus(v, p));
  CMatrix lhs = R(-u + v) * k1u * R21(-u - v - 6.0) * k2v;
  CMatrix rhs = k2v * R(-u - v - 6.0) * k1u * R21(-u + v);
  return (lhs - rhs).frobenius_norm() / (1.0 + lhs.frobenius_norm());
}

cplx K_1dim_scalar_minus(cplx u, const BoundaryParams& p) {
  const CMatrix& w = fusion::P1().basis;  // 16 x 1
  CMatrix mid = kron(K_minus(u, p), I4()) * rmatrix::R21(2.0 * u - 3.0) *
                kron(I4(), K_minus(u - 3.0, p));
  return conjugate_by(mid, w)(0, 0);
}

cplx K_1dim_scalar_plus(cplx u, const BoundaryParams& p) {
  const CMatrix& w = fusion::P1().basis;
  CMatrix mid = kron(I4(), K_plus(u - 3.0, p)) * rmatrix::R(-2.0 * u - 3.0) *
                kron(K_plus(u, p), I4());
  return conjugate_by(mid, w)(0, 0);
}

std::pair<double, double> check_K_1dim_fusion(cplx u, const BoundaryParams& p) {
  const cplx s1 = -(u - 1.0) * (u - 3.0) * h(u, p);
  const cplx s2 = -(u + 1.0) * (u + 3.0) * h_tilde(u, p);
  double r1 = std::abs(K_1dim_scalar_minus(u, p) - s1) / (1.0 + std::abs(s1));
  double r2 = std::abs(K_1dim_scalar_plus(u, p) - s2) / (1.0 + std::abs(s2));
  return {r1, r2};
}

CMatrix fuse_K5(cplx u, const BoundaryParams& p, Sign s) {
  const CMatrix& proj = fusion::P5().matrix;
  const CMatrix& w = fusion::P5().basis;
  if (s == Sign::minus) {
    const cplx norm = (2.0 * u - 1.0) * (2.0 * u + 3.0);
    if (std::abs(norm) < 1e-12)
      throw std::domain_error("fuse_K5(minus): normalizer vanishes");
    CMatrix raw = proj * kron(K_minus(u + 0.5, p), I4()) *
                  rmatrix::R21(2.0 * u) * kron(I4(), K_minus(u - 0.5, p)) * proj;
    return (1.0 / norm) * conjugate_by(raw, w);
  }
  const cplx norm = (2.0 * u + 3.0) * (2.0 * u + 7.0);
  if (std::abs(norm) < 1e-12)
    throw std::domain_error("fuse_K5(plus): normalizer vanishes");
  CMatrix raw = proj * kron(I4(), K_plus(u - 0.5, p)) *
                rmatrix::R(-2.0 * u - 6.0) * kron(K_plus(u + 0.5, p), I4()) * proj;
  return (1.0 / norm) * conjugate_by(raw, w);
}

CMatrix kbar(cplx u, const BoundaryParams& p, Sign s) {
  return make_kbar_pencil(p, s).at(u);
}

CMatrix fuse_K_back(cplx u, const BoundaryParams& p, Sign s) {
  const CMatrix& p4 = fusion::P4().matrix;
  const CMatrix& corr = fusion::correspondence();
  if (s == Sign::minus) {
    const cplx norm = (2.0 * u - 1.0) * h(u + 2.0, p);
    if (std::abs(norm) < 1e-12)
      throw std::domain_error("fuse_K_back(minus): normalizer vanishes");
    CMatrix raw = p4 * kron(I5(), K_minus(u + 2.0, p)) *
                  fusion::rbar_left(2.0 * u + 1.5) *
                  kron(kbar(u - 0.5, p, Sign::minus), I4()) * p4;
    // sign pinned numerically against the contract K_back = K^-
    return (-4.0 / norm) * (corr * raw * corr.adjoint());
  }
  const cplx norm = (u + 5.0) * h_tilde(u + 2.0, p);
  if (std::abs(norm) < 1e-12)
    throw std::domain_error("fuse_K_back(plus): normalizer vanishes");
  CMatrix raw = p4 * kron(kbar(u - 0.5, p, Sign::plus), I4()) *
                fusion::rbar_right_on54(-2.0 * u - 7.5) *
                kron(I5(), K_plus(u + 2.0, p)) * p4;
  return (2.0 / norm) * (corr * raw * corr.adjoint());
}

double check_fused_RE(cplx u, cplx v, const BoundaryParams& p) {
  CMatrix kb1u = kron(kbar(u, p, Sign::minus), I4());
  CMatrix k2v = kron(I5(), K_minus(v, p));
  CMatrix lhs = fusion::rbar_left(u - v) * kb1u * fusion::rbar_right_on54(u + v) * k2v;
  CMatrix rhs = k2v * fusion::rbar_left(u + v) * kb1u * fusion::rbar_right_on54(u - v);
  return (lhs - rhs).frobenius_norm() / (1.0 + lhs.frobenius_norm());
}

double check_fused_dual_RE(cplx u, cplx v, const BoundaryParams& p) {
  CMatrix kb1u = kron(kbar(u, p, Sign::plus), I4());
  CMatrix k2v = kron(I5(), K_plus(v, p));
  CMatrix lhs = fusion::rbar_left(-u + v) * kb1u *
                fusion::rbar_right_on54(-u - v - 6.0) * k2v;
  CMatrix rhs = k2v * fusion::rbar_left(-u - v - 6.0) * kb1u *
                fusion::rbar_right_on54(-u + v);
  return (lhs - rhs).frobenius_norm() / (1.0 + lhs.frobenius_norm());
}

std::pair<cplx, cplx> trace_MtM(const BoundaryParams& p) {
  CMatrix mt = m_matrix(p.c1_t, p.c2_t), m = m_matrix(p.c1, p.c2);
  cplx measured = (mt * m).trace();
  cplx closed = 4.0 + 2.0 * p.c1 * p.c2_t + 2.0 * p.c2 * p.c1_t;
  return {measured, closed};
}

std::pair<cplx, cplx> trace_P5_MtM(const BoundaryParams& p) {
  CMatrix mm = m_matrix(p.c1_t, p.c2_t) * m_matrix(p.c1, p.c2);
  const CMatrix& proj = fusion::P5().matrix;
  cplx measured = (proj * kron(mm, I4()) * kron(I4(), mm) * proj).trace();
  cplx closed = (2.0 + p.c1 * p.c2_t + p.c2 * p.c1_t) *
                    (2.0 + p.c1 * p.c2_t + p.c2 * p.c1_t) +
                (1.0 + p.c1 * p.c2) * (1.0 + p.c1_t * p.c2_t);
  return {measured, closed};
}

}  // namespace sp4::boundary

#include "sp4/fusion.hpp"

#include <cmath>

#include "sp4/rmatrix.hpp"

namespace sp4::fusion {

namespace {

// 1-based |i>|j> on the 16-dim two-site space
std::size_t idx(int i, int j) { return 4 * (i - 1) + (j - 1); }

Projector make_projector(std::size_t dim, const std::vector<std::vector<cplx>>& vecs) {
  Projector p;
  p.dim_ambient = dim;
  p.rank = vecs.size();
  p.basis = CMatrix(dim, vecs.size());
  for (std::size_t c = 0; c < vecs.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) p.basis(r, c) = vecs[c][r];
  p.matrix = p.basis * p.basis.adjoint();
  return p;
}

std::vector<cplx> two_site(std::initializer_list<std::pair<std::pair<int, int>, double>> terms) {
  std::vector<cplx> v(16, cplx(0.0));
  for (const auto& [ij, w] : terms) v[idx(ij.first, ij.second)] = w;
  return v;
}

const double s2 = std::sqrt(2.0);

// Entries of the fused Rbar are degree-1 polynomials of u; the pencil
// Rbar(u) = A + u B extends the projected construction through the
// normalizer zeros.
struct Pencil1 {
  CMatrix a, b;
  CMatrix at(cplx u) const { return a + u * b; }
};

Pencil1 make_pencil(Orientation o) {
  const cplx u0(0.7, 0.0), u1(-0.4, 0.0);
  CMatrix m0 = fuse_R5(u0, o), m1 = fuse_R5(u1, o);
  Pencil1 p;
  p.b = (1.0 / (u0 - u1)) * (m0 - m1);
  p.a = m0 - u0 * p.b;
  return p;
}

}  // namespace

const Projector& P1() {
  static const Projector p = make_projector(
      16, {two_site({{{1, 4}, 0.5}, {{2, 3}, 0.5}, {{3, 2}, -0.5}, {{4, 1}, -0.5}})});
  return p;
}

const Projector& P5() {
  const double h = 0.5, r = 1.0 / s2;
  static const Projector p = make_projector(
      16, {
              two_site({{{1, 2}, r}, {{2, 1}, -r}}),
              two_site({{{1, 3}, r}, {{3, 1}, -r}}),
              two_site({{{1, 4}, h}, {{4, 1}, -h}, {{3, 2}, h}, {{2, 3}, -h}}),
              two_site({{{2, 4}, r}, {{4, 2}, -r}}),
              two_site({{{3, 4}, r}, {{4, 3}, -r}}),
          });
  return p;
}

const Projector& P4() {
  // vectors on the 20-dim fused(x)fundamental space: |psi5_a>(x)|j> -> 4a+(j-1)
  auto fused = [](int a, int j) { return static_cast<std::size_t>(4 * (a - 1) + (j - 1)); };
  const double w = s2 / std::sqrt(5.0), v = 1.0 / std::sqrt(5.0);
  auto vec = [&](std::initializer_list<std::tuple<int, int, double>> terms) {
    std::vector<cplx> out(20, cplx(0.0));
    for (const auto& [a, j, c] : terms) out[fused(a, j)] = c;
    return out;
  };
  static const Projector p = make_projector(
      20, {
              vec({{1, 3, w}, {2, 2, -w}, {3, 1, -v}}),
              vec({{1, 4, -w}, {4, 1, -w}, {3, 2, v}}),
              vec({{2, 4, -w}, {5, 1, -w}, {3, 3, v}}),
              vec({{4, 3, -w}, {5, 2, w}, {3, 4, -v}}),
          });
  return p;
}

const CMatrix& correspondence() {
  static const CMatrix c = P4().basis.adjoint();
  return c;
}

CMatrix fuse_R5(cplx u, Orientation o) {
  using rmatrix::R;
  for (cplx s : {cplx(-1.5), cplx(0.5), cplx(-3.5)})
    if (std::abs(u - s) < 1e-12)
      throw std::domain_error("fuse_R5: normalizer vanishes at u = " +
                              std::to_string(s.real()));
  const std::vector<int> dims = {4, 4, 4};
  const cplx norm = (u + 1.5) * rmatrix::rho0_tilde(u + 0.5);
  if (o == Orientation::left) {
    CMatrix p5 = embed(P5().matrix, {0, 1}, dims);
    CMatrix raw = p5 * embed(R(u + 0.5), {1, 2}, dims) *
                  embed(R(u - 0.5), {0, 2}, dims) * p5;
    CMatrix w = kron(P5().basis, CMatrix::identity(4));  // 64 x 20
    return (1.0 / norm) * conjugate_by(raw, w);
  }
  // right: ambient (V3, V1, V2), projector on the trailing pair
  CMatrix p5 = embed(P5().matrix, {1, 2}, dims);
  CMatrix raw = p5 * embed(R(u + 0.5), {0, 2}, dims) *
                embed(R(u - 0.5), {0, 1}, dims) * p5;
  CMatrix w = kron(CMatrix::identity(4), P5().basis);
  return (1.0 / norm) * conjugate_by(raw, w);
}

CMatrix rbar_left(cplx u) {
  static const Pencil1 p = make_pencil(Orientation::left);
  return p.at(u);
}

CMatrix rbar_right(cplx u) {
  static const Pencil1 p = make_pencil(Orientation::right);
  return p.at(u);
}

CMatrix rbar_right_on54(cplx u) {
  static const CMatrix s = factor_swap(5, 4);
  static const CMatrix st = s.transpose();
  return st * rbar_right(u) * s;
}

CMatrix fuse_back(cplx u) {
  using rmatrix::R;
  if (std::abs(u + 5.0) < 1e-12)
    throw std::domain_error("fuse_back: normalizer vanishes at u = -5");
  const std::vector<int> dims = {5, 4, 4};
  CMatrix p4 = embed(P4().matrix, {0, 1}, dims);
  CMatrix raw = p4 * embed(R(u + 2.0), {1, 2}, dims) *
                embed(rbar_left(u - 0.5), {0, 2}, dims) * p4;
  CMatrix c = kron(correspondence(), CMatrix::identity(4));  // 16 x 80
  return (1.0 / (u + 5.0)) * (c * raw * c.adjoint());
}

CMatrix fuse_back_mirror(cplx u) {
  using rmatrix::R;
  if (std::abs(u + 5.0) < 1e-12)
    throw std::domain_error("fuse_back_mirror: normalizer vanishes at u = -5");
  const std::vector<int> dims = {4, 4, 5};
  static const CMatrix s = factor_swap(5, 4);
  static const CMatrix p4r = s * P4().matrix * s.transpose();  // 4(x)5 ordering
  CMatrix p4 = embed(p4r, {1, 2}, dims);
  CMatrix raw = p4 * embed(R(u + 2.0), {0, 1}, dims) *
                embed(rbar_right(u - 0.5), {0, 2}, dims) * p4;
  CMatrix c21 = correspondence() * s.transpose();  // 4 x 20 from 4(x)5
  CMatrix c = kron(CMatrix::identity(4), c21);
  return (1.0 / (u + 5.0)) * (c * raw * c.adjoint());
}

std::pair<double, double> check_fusion_scalar_identities(cplx u) {
  using rmatrix::R;
  const std::vector<int> dims = {4, 4, 4};
  const cplx scalar = rmatrix::wa(u) * rmatrix::we(u - 3.0);

  CMatrix p1 = embed(P1().matrix, {0, 1}, dims);
  CMatrix lhs = p1 * embed(R(u), {1, 2}, dims) * embed(R(u - 3.0), {0, 2}, dims) * p1;
  CMatrix rhs = scalar * p1;
  double r1 = (lhs - rhs).frobenius_norm() / (1.0 + rhs.frobenius_norm());

  CMatrix p1m = embed(P1().matrix, {1, 2}, dims);
  CMatrix lhs2 =
      p1m * embed(R(u), {0, 2}, dims) * embed(R(u - 3.0), {0, 1}, dims) * p1m;
  CMatrix rhs2 = scalar * p1m;
  double r2 = (lhs2 - rhs2).frobenius_norm() / (1.0 + rhs2.frobenius_norm());
  return {r1, r2};
}

double check_rbar_unitarity(cplx u) {
  CMatrix prod = rbar_left(u) * rbar_right_on54(-u);
  const cplx scalar = -(u + 2.5) * (u - 2.5);
  CMatrix target = scalar * CMatrix::identity(20);
  return (prod - target).frobenius_norm() / (1.0 + std::abs(scalar));
}

double check_rbar_crossing(cplx u) {
  static const CMatrix s = factor_swap(5, 4);
  static const CMatrix st = s.transpose();
  CMatrix lhs = partial_transpose_first(rbar_left(u), 5, 4);
  CMatrix right54 = st * partial_transpose_second(rbar_right(-u - 6.0), 4, 5) * s;
  const cplx scalar = -(u + 0.5) * (u + 5.5);
  CMatrix target = scalar * CMatrix::identity(20);
  return (lhs * right54 - target).frobenius_norm() / (1.0 + std::abs(scalar));
}

double check_mixed_ybe(cplx u, cplx v) {
  const std::vector<int> dims = {5, 4, 4};
  CMatrix rb12 = embed(rbar_left(u - v), {0, 1}, dims);
  CMatrix rb13 = embed(rbar_left(u), {0, 2}, dims);
  CMatrix r23 = embed(rmatrix::R(v), {1, 2}, dims);
  CMatrix lhs = rb12 * rb13 * r23;
  CMatrix rhs = r23 * rb13 * rb12;
  return (lhs - rhs).frobenius_norm() / (1.0 + lhs.frobenius_norm());
}

}  // namespace sp4::fusion

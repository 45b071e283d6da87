#include "sp4/rmatrix.hpp"

namespace sp4::rmatrix {

CMatrix R(cplx u) {
  CMatrix r(16, 16);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          cplx v = 0.0;
          if (i == k && j == l) v += u * (u + 3.0);
          if (i == l && j == k) v += u + 3.0;
          if (j == bar(i) && k == bar(l))
            v -= u * static_cast<double>(xi(i) * xi(k));
          if (v != cplx(0.0))
            r(4 * (i - 1) + (j - 1), 4 * (k - 1) + (l - 1)) = v;
        }
  return r;
}

CMatrix R21(cplx u) {
  static const CMatrix p = permutation_op(4);
  return p * R(u) * p;
}

double check_qybe(cplx u, cplx v) {
  const std::vector<int> dims = {4, 4, 4};
  CMatrix r12 = embed(R(u - v), {0, 1}, dims);
  CMatrix r13 = embed(R(u), {0, 2}, dims);
  CMatrix r23 = embed(R(v), {1, 2}, dims);
  CMatrix lhs = r12 * r13 * r23;
  CMatrix rhs = r23 * r13 * r12;
  return (lhs - rhs).frobenius_norm() / (1.0 + lhs.frobenius_norm());
}

double check_unitarity(cplx u) {
  CMatrix prod = R(u) * R21(-u);
  CMatrix target = rho1(u) * CMatrix::identity(16);
  return (prod - target).frobenius_norm() / (1.0 + std::abs(rho1(u)));
}

double check_crossing(cplx u) {
  CMatrix lhs = partial_transpose_first(R(u), 4, 4) *
                partial_transpose_first(R21(-u - 6.0), 4, 4);
  CMatrix target = rho1(u + 3.0) * CMatrix::identity(16);
  return (lhs - target).frobenius_norm() / (1.0 + std::abs(rho1(u + 3.0)));
}

}  // namespace sp4::rmatrix

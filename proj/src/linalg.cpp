#include "sp4/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <lapacke.h>

namespace sp4 {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CMatrix += shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CMatrix -= shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

CMatrix CMatrix::transpose() const {
  CMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CMatrix CMatrix::adjoint() const {
  CMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

cplx CMatrix::trace() const {
  cplx s = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double s = 0.0;
  for (const auto& x : data_) s = std::max(s, std::abs(x));
  return s;
}

void CMatrix::check_finite(const std::string& what) const {
  for (const auto& x : data_)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw std::domain_error(what + ": non-finite entry");
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
  CMatrix c(a.rows(), b.cols());
  kernels::matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  kernels::kron(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.rows(), b.cols());
  return c;
}

CMatrix permutation_op(std::size_t d) {
  if (d < 1) throw std::invalid_argument("permutation_op: d must be >= 1");
  CMatrix p(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p(i * d + j, j * d + i) = 1.0;
  return p;
}

CMatrix embed(const CMatrix& op, const std::vector<int>& sites,
              const std::vector<int>& dims) {
  const std::size_t n = dims.size();
  std::vector<char> used(n, 0);
  std::size_t d_op = 1;
  for (int s : sites) {
    if (s < 0 || static_cast<std::size_t>(s) >= n)
      throw std::invalid_argument("embed: site index out of range");
    if (used[s]) throw std::invalid_argument("embed: duplicate site index");
    used[s] = 1;
    d_op *= static_cast<std::size_t>(dims[s]);
  }
  if (op.rows() != d_op || op.cols() != d_op)
    throw std::invalid_argument("embed: operator dimension mismatch");

  std::vector<std::size_t> stride(n);
  std::size_t total = 1;
  for (std::size_t k = n; k-- > 0;) {
    stride[k] = total;
    total *= static_cast<std::size_t>(dims[k]);
  }
  // strides of op's own row-major digit layout (listed order)
  std::vector<std::size_t> op_stride(sites.size());
  {
    std::size_t acc = 1;
    for (std::size_t k = sites.size(); k-- > 0;) {
      op_stride[k] = acc;
      acc *= static_cast<std::size_t>(dims[sites[k]]);
    }
  }
  std::vector<int> others;
  for (std::size_t s = 0; s < n; ++s)
    if (!used[s]) others.push_back(static_cast<int>(s));

  std::size_t n_spect = total / d_op;
  CMatrix out(total, total);
  // offsets of op sub-indices within the global index
  std::vector<std::size_t> row_off(d_op);
  for (std::size_t arow = 0; arow < d_op; ++arow) {
    std::size_t off = 0;
    for (std::size_t k = 0; k < sites.size(); ++k) {
      std::size_t dig = (arow / op_stride[k]) % static_cast<std::size_t>(dims[sites[k]]);
      off += dig * stride[sites[k]];
    }
    row_off[arow] = off;
  }
  for (std::size_t sp = 0; sp < n_spect; ++sp) {
    std::size_t base = 0, rem = sp;
    for (std::size_t k = others.size(); k-- > 0;) {
      int s = others[k];
      base += (rem % static_cast<std::size_t>(dims[s])) * stride[s];
      rem /= static_cast<std::size_t>(dims[s]);
    }
    for (std::size_t arow = 0; arow < d_op; ++arow) {
      const std::size_t r = base + row_off[arow];
      for (std::size_t acol = 0; acol < d_op; ++acol)
        out(r, base + row_off[acol]) = op(arow, acol);
    }
  }
  return out;
}

CMatrix partial_trace_aux(const CMatrix& m, std::size_t d_aux, std::size_t d_q) {
  if (m.rows() != d_aux * d_q || m.cols() != d_aux * d_q)
    throw std::invalid_argument("partial_trace_aux: dimension mismatch");
  CMatrix out(d_q, d_q);
  for (std::size_t i = 0; i < d_aux; ++i)
    for (std::size_t a = 0; a < d_q; ++a)
      for (std::size_t b = 0; b < d_q; ++b)
        out(a, b) += m(i * d_q + a, i * d_q + b);
  return out;
}

CMatrix partial_transpose_first(const CMatrix& m, std::size_t d1, std::size_t d2) {
  if (m.rows() != d1 * d2 || m.cols() != d1 * d2)
    throw std::invalid_argument("partial_transpose_first: dimension mismatch");
  CMatrix out(d1 * d2, d1 * d2);
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d1; ++b)
      for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t j = 0; j < d2; ++j)
          out(a * d2 + i, b * d2 + j) = m(b * d2 + i, a * d2 + j);
  return out;
}

CMatrix partial_transpose_second(const CMatrix& m, std::size_t d1, std::size_t d2) {
  if (m.rows() != d1 * d2 || m.cols() != d1 * d2)
    throw std::invalid_argument("partial_transpose_second: dimension mismatch");
  CMatrix out(d1 * d2, d1 * d2);
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d1; ++b)
      for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t j = 0; j < d2; ++j)
          out(a * d2 + j, b * d2 + i) = m(a * d2 + i, b * d2 + j);
  return out;
}

CMatrix factor_swap(std::size_t d1, std::size_t d2) {
  CMatrix s(d1 * d2, d1 * d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t a = 0; a < d2; ++a) s(a * d1 + i, i * d2 + a) = 1.0;
  return s;
}

CMatrix conjugate_by(const CMatrix& m, const CMatrix& v) {
  return v.adjoint() * m * v;
}

EigenSystem eig_general(const CMatrix& a) {
  if (!a.square()) throw std::invalid_argument("eig_general: matrix not square");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  CMatrix work = a;  // zgeev overwrites
  EigenSystem es;
  es.values.resize(a.rows());
  es.right = CMatrix(a.rows(), a.rows());
  es.left = CMatrix(a.rows(), a.rows());
  lapack_int info = LAPACKE_zgeev(
      LAPACK_ROW_MAJOR, 'V', 'V', n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n,
      reinterpret_cast<lapack_complex_double*>(es.values.data()),
      reinterpret_cast<lapack_complex_double*>(es.left.data()), n,
      reinterpret_cast<lapack_complex_double*>(es.right.data()), n);
  if (info != 0)
    throw std::runtime_error("eig_general: zgeev failed to converge (info=" +
                             std::to_string(info) + ")");
  return es;
}

std::vector<cplx> eigenvalues_only(const CMatrix& a) {
  if (!a.square()) throw std::invalid_argument("eigenvalues_only: matrix not square");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  CMatrix work = a;
  std::vector<cplx> vals(a.rows());
  lapack_int info = LAPACKE_zgeev(
      LAPACK_ROW_MAJOR, 'N', 'N', n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n,
      reinterpret_cast<lapack_complex_double*>(vals.data()), nullptr, n, nullptr, n);
  if (info != 0)
    throw std::runtime_error("eigenvalues_only: zgeev failed to converge (info=" +
                             std::to_string(info) + ")");
  return vals;
}

std::vector<double> singular_values(const CMatrix& a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  CMatrix work = a;
  std::vector<double> s(std::min(a.rows(), a.cols()));
  std::vector<double> superb(std::max<std::size_t>(1, s.size()));
  lapack_int info = LAPACKE_zgesvd(
      LAPACK_ROW_MAJOR, 'N', 'N', m, n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n, s.data(),
      nullptr, 1, nullptr, 1, superb.data());
  if (info != 0)
    throw std::runtime_error("singular_values: zgesvd failed (info=" +
                             std::to_string(info) + ")");
  return s;
}

std::size_t numerical_rank(const CMatrix& a, double tol) {
  auto s = singular_values(a);
  if (s.empty()) return 0;
  const double cut = tol * s.front();
  std::size_t r = 0;
  for (double x : s)
    if (x > cut) ++r;
  return r;
}

std::vector<cplx> solve_linear(const CMatrix& a, const std::vector<cplx>& b) {
  if (!a.square() || a.rows() != b.size())
    throw std::invalid_argument("solve_linear: shape mismatch");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  CMatrix lu = a;
  std::vector<cplx> x = b;
  std::vector<lapack_int> ipiv(a.rows());
  lapack_int info = LAPACKE_zgesv(
      LAPACK_ROW_MAJOR, n, 1,
      reinterpret_cast<lapack_complex_double*>(lu.data()), n, ipiv.data(),
      reinterpret_cast<lapack_complex_double*>(x.data()), 1);
  if (info != 0)
    throw std::runtime_error("solve_linear: singular system (info=" +
                             std::to_string(info) + ")");
  return x;
}

double commutator_norm(const CMatrix& a, const CMatrix& b) {
  return (a * b - b * a).frobenius_norm();
}

}  // namespace sp4

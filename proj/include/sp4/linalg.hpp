#ifndef SP4_LINALG_HPP
#define SP4_LINALG_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sp4/kernels.hpp"

namespace sp4 {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. The single carrier type for every
/// operator in the artifact (R-matrices, monodromies, transfer matrices).
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

  CMatrix transpose() const;
  CMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  /// Throws std::domain_error if any entry is NaN or Inf.
  void check_finite(const std::string& what) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);  // matmul (dispatching kernel)
CMatrix operator*(cplx s, CMatrix a);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// d^2 x d^2 swap: P^{ij}_{kl} = delta_{il} delta_{jk}.
CMatrix permutation_op(std::size_t d);

/// Embeds `op` into the tensor product with per-factor dimensions `dims`,
/// acting as `op` on the listed factors (in the listed order) and as the
/// identity elsewhere. Site indices are 0-based. Non-adjacent and
/// order-reversed placements are supported.
CMatrix embed(const CMatrix& op, const std::vector<int>& sites,
              const std::vector<int>& dims);

/// Trace over the first (auxiliary) factor of an (d_aux*d_q) square matrix.
CMatrix partial_trace_aux(const CMatrix& m, std::size_t d_aux, std::size_t d_q);

/// Partial transpose on the first / second factor of a (d1*d2) square matrix.
CMatrix partial_transpose_first(const CMatrix& m, std::size_t d1, std::size_t d2);
CMatrix partial_transpose_second(const CMatrix& m, std::size_t d1, std::size_t d2);

/// Permutation matrix mapping the d1 (x) d2 product basis onto d2 (x) d1:
/// |i>|a| -> |a>|i>. Used to re-order mixed-dimension tensor factors.
CMatrix factor_swap(std::size_t d1, std::size_t d2);

/// Apply an isometry sandwich: V^H M V with V of shape (m.rows, k).
CMatrix conjugate_by(const CMatrix& m, const CMatrix& v);

struct EigenSystem {
  std::vector<cplx> values;
  CMatrix right;  // columns: right eigenvectors, a v = lambda v
  CMatrix left;   // columns: left eigenvectors, w^H a = lambda w^H
};

/// Full non-symmetric eigendecomposition with paired left/right vectors.
/// Throws std::runtime_error if the QR iteration fails to converge.
EigenSystem eig_general(const CMatrix& a);

std::vector<cplx> eigenvalues_only(const CMatrix& a);

std::vector<double> singular_values(const CMatrix& a);

/// Numerical rank with relative cutoff tol * sigma_max.
std::size_t numerical_rank(const CMatrix& a, double tol = 1e-9);

/// Solve a x = b for one right-hand side. Throws on singular factorization.
std::vector<cplx> solve_linear(const CMatrix& a, const std::vector<cplx>& b);

double commutator_norm(const CMatrix& a, const CMatrix& b);

}  // namespace sp4

#endif

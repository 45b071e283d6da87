#ifndef SP4_POLY_HPP
#define SP4_POLY_HPP

#include <complex>
#include <functional>
#include <vector>

#include "sp4/linalg.hpp"

namespace sp4 {

/// Polynomial with complex coefficients, ascending degree. An empty
/// coefficient list is the zero polynomial.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {}

  const std::vector<cplx>& coeffs() const { return c_; }
  std::vector<cplx>& coeffs() { return c_; }

  cplx eval(cplx u) const;
  Poly derivative() const;

  /// Degree after dropping trailing coefficients below tol * max|coeff|.
  /// Returns -1 for the (numerically) zero polynomial.
  int degree(double tol = 1e-8) const;

  /// Drop trailing coefficients below tol * max|coeff|.
  Poly trimmed(double tol = 1e-8) const;

  cplx leading(double tol = 1e-8) const;

 private:
  std::vector<cplx> c_;
};

/// Scaled roots-of-unity sampling grid: nodes = center + radius * w^k.
/// Roots-of-unity nodes keep the Vandermonde system perfectly conditioned.
struct SampleGrid {
  cplx center;
  double radius;
  std::size_t count;

  SampleGrid(cplx c, double r, std::size_t n);
  std::vector<cplx> nodes() const;
};

/// Recover the unique polynomial of degree < grid.count through samples taken
/// at grid.nodes (inverse DFT in the shifted/scaled variable, then recentred).
/// Throws std::invalid_argument when the sample points do not match the grid.
Poly interpolate(const std::vector<std::pair<cplx, cplx>>& samples,
                 const SampleGrid& grid);

/// Sample fn on the grid and interpolate.
Poly fit_poly(const std::function<cplx(cplx)>& fn, const SampleGrid& grid);

/// Per-entry polynomial fit of a matrix pencil u -> CMatrix; returns
/// coefficient matrices c[0..count-1] with M(u) = sum_m c[m] u^m.
std::vector<CMatrix> fit_matrix_poly(const std::function<CMatrix(cplx)>& fn,
                                     const SampleGrid& grid);

}  // namespace sp4

#endif

#include "sp4/poly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sp4 {

cplx Poly::eval(cplx u) const {
  cplx s = 0.0;
  for (std::size_t k = c_.size(); k-- > 0;) s = s * u + c_[k];
  return s;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly{};
  std::vector<cplx> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Poly(std::move(d));
}

int Poly::degree(double tol) const {
  double mx = 0.0;
  for (const auto& x : c_) mx = std::max(mx, std::abs(x));
  if (mx == 0.0) return -1;
  for (std::size_t k = c_.size(); k-- > 0;)
    if (std::abs(c_[k]) > tol * mx) return static_cast<int>(k);
  return -1;
}

Poly Poly::trimmed(double tol) const {
  int d = degree(tol);
  if (d < 0) return Poly{};
  return Poly(std::vector<cplx>(c_.begin(), c_.begin() + d + 1));
}

cplx Poly::leading(double tol) const {
  int d = degree(tol);
  return d < 0 ? cplx(0.0) : c_[static_cast<std::size_t>(d)];
}

SampleGrid::SampleGrid(cplx c, double r, std::size_t n)
    : center(c), radius(r), count(n) {
  if (n == 0 || r <= 0.0)
    throw std::invalid_argument("SampleGrid: need count >= 1 and radius > 0");
}

std::vector<cplx> SampleGrid::nodes() const {
  std::vector<cplx> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
    out[k] = center + radius * cplx(std::cos(phi), std::sin(phi));
  }
  return out;
}

namespace {

// Inverse DFT of the node values: coefficients in the scaled variable
// w = (u - center)/radius, i.e. a_m * radius^m.
std::vector<cplx> idft(const std::vector<cplx>& vals) {
  const std::size_t n = vals.size();
  std::vector<cplx> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      double phi = -2.0 * std::numbers::pi * static_cast<double>(k * m) / static_cast<double>(n);
      s += vals[k] * cplx(std::cos(phi), std::sin(phi));
    }
    out[m] = s / static_cast<double>(n);
  }
  return out;
}

// Recentre p(w) with u = center + radius*w into coefficients of u.
std::vector<cplx> recentre(const std::vector<cplx>& scaled, cplx center, double radius) {
  const std::size_t n = scaled.size();
  std::vector<cplx> out(n, cplx(0.0));
  std::vector<cplx> power = {cplx(1.0)};  // coefficients of (u - center)^m
  for (std::size_t m = 0; m < n; ++m) {
    const cplx am = scaled[m] / std::pow(radius, static_cast<double>(m));
    for (std::size_t k = 0; k < power.size(); ++k) out[k] += am * power[k];
    std::vector<cplx> next(power.size() + 1, cplx(0.0));
    for (std::size_t k = 0; k < power.size(); ++k) {
      next[k + 1] += power[k];
      next[k] -= center * power[k];
    }
    power = std::move(next);
  }
  return out;
}

}  // namespace

Poly interpolate(const std::vector<std::pair<cplx, cplx>>& samples,
                 const SampleGrid& grid) {
  if (samples.size() != grid.count)
    throw std::invalid_argument("interpolate: sample count does not match grid");
  auto nd = grid.nodes();
  std::vector<cplx> vals(grid.count);
  for (std::size_t k = 0; k < grid.count; ++k) {
    if (std::abs(samples[k].first - nd[k]) > 1e-12 * (1.0 + std::abs(nd[k])))
      throw std::invalid_argument("interpolate: sample point does not match grid node");
    vals[k] = samples[k].second;
  }
  auto scaled = idft(vals);
  if (grid.center == cplx(0.0)) {
    for (std::size_t m = 0; m < scaled.size(); ++m)
      scaled[m] /= std::pow(grid.radius, static_cast<double>(m));
    return Poly(std::move(scaled));
  }
  return Poly(recentre(scaled, grid.center, grid.radius));
}

Poly fit_poly(const std::function<cplx(cplx)>& fn, const SampleGrid& grid) {
  auto nd = grid.nodes();
  std::vector<std::pair<cplx, cplx>> samples(nd.size());
  for (std::size_t k = 0; k < nd.size(); ++k) samples[k] = {nd[k], fn(nd[k])};
  return interpolate(samples, grid);
}

std::vector<CMatrix> fit_matrix_poly(const std::function<CMatrix(cplx)>& fn,
                                     const SampleGrid& grid) {
  auto nd = grid.nodes();
  std::vector<CMatrix> vals;
  vals.reserve(nd.size());
  for (auto z : nd) vals.push_back(fn(z));
  const std::size_t n = nd.size();
  const std::size_t rows = vals.front().rows(), cols = vals.front().cols();
  std::vector<CMatrix> out(n, CMatrix(rows, cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<std::pair<cplx, cplx>> samples(n);
      for (std::size_t k = 0; k < n; ++k) samples[k] = {nd[k], vals[k](i, j)};
      Poly p = interpolate(samples, grid);
      for (std::size_t m = 0; m < n && m < p.coeffs().size(); ++m)
        out[m](i, j) = p.coeffs()[m];
    }
  return out;
}

}  // namespace sp4

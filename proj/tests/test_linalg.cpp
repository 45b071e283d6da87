#include "doctest.h"

#include <random>

#include "sp4/kernels.hpp"
#include "sp4/linalg.hpp"

using namespace sp4;

namespace {

CMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ur(-1.0, 1.0);
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = cplx(ur(rng), ur(rng));
  return m;
}

CMatrix diag2(cplx a, cplx b) {
  CMatrix m(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("kron identity and diagonal cases") {
  CMatrix id2 = CMatrix::identity(2);
  CHECK((kron(id2, id2) - CMatrix::identity(4)).frobenius_norm() == 0.0);

  CMatrix d = kron(diag2(1.0, 2.0), id2);
  CHECK(d(0, 0) == cplx(1.0));
  CHECK(d(1, 1) == cplx(1.0));
  CHECK(d(2, 2) == cplx(2.0));
  CHECK(d(3, 3) == cplx(2.0));
}

TEST_CASE("kron mixed-product rule against direct multiplication") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 5; ++t) {
    CMatrix a = random_matrix(2, 2, rng), b = random_matrix(2, 2, rng);
    CMatrix c = random_matrix(2, 2, rng), d = random_matrix(2, 2, rng);
    CMatrix lhs = kron(a, b) * kron(c, d);
    CMatrix rhs = kron(a * c, b * d);
    CHECK((lhs - rhs).frobenius_norm() < 1e-13);
  }
}

TEST_CASE("kron associativity is exact") {
  std::mt19937_64 rng(12);
  CMatrix a = random_matrix(2, 3, rng), b = random_matrix(3, 2, rng),
          c = random_matrix(2, 2, rng);
  CMatrix lhs = kron(kron(a, b), c);
  CMatrix rhs = kron(a, kron(b, c));
  CHECK((lhs - rhs).frobenius_norm() == 0.0);
}

TEST_CASE("omp kernels agree with the serial reference") {
  std::mt19937_64 rng(13);
  const std::size_t n = 96;
  CMatrix a = random_matrix(n, n, rng), b = random_matrix(n, n, rng);
  CMatrix cs(n, n), cp(n, n);
  kernels::matmul_serial(a.data(), b.data(), cs.data(), n, n, n);
  kernels::matmul_omp(a.data(), b.data(), cp.data(), n, n, n);
  CHECK((cs - cp).frobenius_norm() == 0.0);

  CMatrix ks(n * 8, n * 8), kp(n * 8, n * 8);
  CMatrix small = random_matrix(8, 8, rng);
  kernels::kron_serial(a.data(), small.data(), ks.data(), n, n, 8, 8);
  kernels::kron_omp(a.data(), small.data(), kp.data(), n, n, 8, 8);
  CHECK((ks - kp).frobenius_norm() == 0.0);
}

TEST_CASE("permutation operator") {
  CMatrix p2 = permutation_op(2);
  CHECK((p2 * p2 - CMatrix::identity(4)).frobenius_norm() == 0.0);

  CMatrix p4 = permutation_op(4);
  CHECK(std::abs(p4.trace() - cplx(4.0)) == 0.0);

  std::mt19937_64 rng(14);
  CMatrix x = random_matrix(4, 1, rng), y = random_matrix(4, 1, rng);
  // P (x (x) y) = y (x) x
  CMatrix xy = kron(x, y), yx = kron(y, x);
  CHECK((p4 * xy - yx).frobenius_norm() < 1e-14);
}

TEST_CASE("embed places factors and order correctly") {
  std::mt19937_64 rng(15);
  CMatrix x = random_matrix(2, 2, rng);
  CMatrix id2 = CMatrix::identity(2);
  CHECK((embed(x, {0}, {2, 2}) - kron(x, id2)).frobenius_norm() == 0.0);
  CHECK((embed(x, {1}, {2, 2}) - kron(id2, x)).frobenius_norm() == 0.0);

  // swap is symmetric: embedding on [1,0] equals embedding on [0,1]
  CMatrix p = permutation_op(2);
  CHECK((embed(p, {1, 0}, {2, 2}) - embed(p, {0, 1}, {2, 2})).frobenius_norm() <
        1e-14);

  // order reversal is conjugation by the swap
  CMatrix a = random_matrix(4, 4, rng);
  CMatrix s = factor_swap(2, 2);
  CMatrix rev = embed(s.transpose() * a * s, {0, 1}, {2, 2});
  CHECK((embed(a, {1, 0}, {2, 2}) - rev).frobenius_norm() < 1e-13);

  CHECK_THROWS_AS(embed(x, {0, 0}, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(embed(x, {0}, {3, 3}), std::invalid_argument);
}

TEST_CASE("disjoint embeddings commute") {
  std::mt19937_64 rng(16);
  std::vector<int> dims = {2, 3, 2, 2};
  CMatrix a = random_matrix(6, 6, rng);   // factors {0,1}
  CMatrix b = random_matrix(4, 4, rng);   // factors {2,3}
  CMatrix ea = embed(a, {0, 1}, dims);
  CMatrix eb = embed(b, {2, 3}, dims);
  CHECK(commutator_norm(ea, eb) < 1e-12);
}

TEST_CASE("partial trace over the auxiliary factor") {
  std::mt19937_64 rng(17);
  CMatrix a = random_matrix(3, 3, rng), b = random_matrix(4, 4, rng);
  CMatrix pt = partial_trace_aux(kron(a, b), 3, 4);
  CMatrix want = a.trace() * b;
  CHECK((pt - want).frobenius_norm() < 1e-13);

  CMatrix ptid = partial_trace_aux(CMatrix::identity(12), 3, 4);
  CHECK((ptid - 3.0 * CMatrix::identity(4)).frobenius_norm() == 0.0);

  CMatrix m = random_matrix(12, 12, rng);
  CHECK(std::abs(partial_trace_aux(m, 3, 4).trace() - m.trace()) < 1e-13);
}

TEST_CASE("eig_general on a diagonal matrix") {
  CMatrix d(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  d(2, 2) = 3.0;
  auto es = eig_general(d);
  std::vector<double> got;
  for (cplx v : es.values) got.push_back(v.real());
  std::sort(got.begin(), got.end());
  CHECK(got[0] == doctest::Approx(1.0));
  CHECK(got[1] == doctest::Approx(2.0));
  CHECK(got[2] == doctest::Approx(3.0));
}

TEST_CASE("eig_general recovers a constructed spectrum") {
  std::mt19937_64 rng(18);
  const std::size_t n = 12;
  std::vector<cplx> lams(n);
  for (auto& l : lams) l = cplx(std::uniform_real_distribution<double>(-2, 2)(rng),
                                std::uniform_real_distribution<double>(-1, 1)(rng));
  // a = S diag(lams) S^-1 realized by solving S X = diag * S columnwise
  CMatrix s = random_matrix(n, n, rng);
  s += 3.0 * CMatrix::identity(n);  // keep it comfortably invertible
  CMatrix sd(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sd(i, j) = s(i, j) * lams[j];
  // a = sd * s^{-1}: solve a * s = sd  =>  s^T a^T = sd^T
  CMatrix st = s.transpose(), sdt = sd.transpose();
  CMatrix at(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<cplx> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = sdt(i, col);
    auto x = solve_linear(st, rhs);
    for (std::size_t i = 0; i < n; ++i) at(i, col) = x[i];
  }
  CMatrix a = at.transpose();

  auto es = eig_general(a);
  auto sortkey = [](cplx z) { return std::make_pair(z.real(), z.imag()); };
  std::sort(lams.begin(), lams.end(),
            [&](cplx l, cplx r) { return sortkey(l) < sortkey(r); });
  auto got = es.values;
  std::sort(got.begin(), got.end(),
            [&](cplx l, cplx r) { return sortkey(l) < sortkey(r); });
  for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(got[i] - lams[i]) < 1e-10);
}

TEST_CASE("eig_general residuals and left/right pairing on a random matrix") {
  std::mt19937_64 rng(19);
  const std::size_t n = 64;
  CMatrix a = random_matrix(n, n, rng);
  auto es = eig_general(a);
  for (std::size_t m = 0; m < n; ++m) {
    double rres = 0.0, lres = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx accr = 0.0, accl = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        accr += a(i, j) * es.right(j, m);
        accl += std::conj(es.left(j, m)) * a(j, i);
      }
      rres += std::norm(accr - es.values[m] * es.right(i, m));
      lres += std::norm(accl - es.values[m] * std::conj(es.left(i, m)));
    }
    CHECK(std::sqrt(rres) / (1.0 + a.frobenius_norm()) < 1e-10);
    CHECK(std::sqrt(lres) / (1.0 + a.frobenius_norm()) < 1e-10);
  }
}

TEST_CASE("singular values and rank") {
  std::mt19937_64 rng(20);
  CMatrix a = random_matrix(6, 2, rng);
  CMatrix low = a * a.adjoint();  // rank 2 in a 6-dim space
  CHECK(numerical_rank(low, 1e-9) == 2);
}

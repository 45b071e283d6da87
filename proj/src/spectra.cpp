#include "sp4/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sp4/rmatrix.hpp"

namespace sp4::spectra {

using transfer::ChainSpec;

namespace {

cplx rayleigh(const CMatrix& m, const std::vector<cplx>& v,
              const std::vector<cplx>& w, cplx denom) {
  const std::size_t n = v.size();
  cplx num = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * v[j];
    num += std::conj(w[i]) * acc;
  }
  return num / denom;
}

}  // namespace

std::vector<EigenBranch> branches(const ChainSpec& spec, const BranchOptions& opt) {
  spec.validate();
  const std::size_t d = spec.quantum_dim();
  if (d > 256)
    throw std::invalid_argument("branches: quantum dimension exceeds 256");

  auto [deg_t, deg_tb] = transfer::transfer_degrees(spec);
  SampleGrid grid_t(cplx(0.0), opt.radius,
                    static_cast<std::size_t>(deg_t + 1 + opt.extra_nodes));
  SampleGrid grid_tb(cplx(0.0), opt.radius,
                     static_cast<std::size_t>(deg_tb + 1 + opt.extra_nodes));

  CMatrix t0 = transfer::transfer(opt.anchor_u0, spec, false);
  CMatrix tb1 = transfer::transfer(opt.anchor_u1, spec, true);

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unif(0.25, 1.0);

  EigenSystem es;
  bool ok = false;
  for (int attempt = 0; attempt < opt.max_redraws && !ok; ++attempt) {
    cplx alpha(unif(rng), unif(rng)), beta(unif(rng), unif(rng));
    CMatrix comb = alpha * t0 + beta * tb1;
    es = eig_general(comb);
    // minimal eigenvalue gap: a collapsed pair spoils the Rayleigh recovery
    double scale = comb.frobenius_norm();
    double min_gap = 1e300;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        min_gap = std::min(min_gap, std::abs(es.values[i] - es.values[j]));
    ok = min_gap > 1e-10 * (1.0 + scale);
  }
  if (!ok)
    throw std::runtime_error(
        "branches: transfer family combination stayed degenerate after redraws");

  // sampled transfer matrices, shared across branches
  std::vector<CMatrix> t_samples, tb_samples;
  for (cplx z : grid_t.nodes()) t_samples.push_back(transfer::transfer(z, spec, false));
  for (cplx z : grid_tb.nodes()) tb_samples.push_back(transfer::transfer(z, spec, true));

  std::vector<EigenBranch> out(d);
  auto nodes_t = grid_t.nodes();
  auto nodes_tb = grid_tb.nodes();
  for (std::size_t m = 0; m < d; ++m) {
    EigenBranch& b = out[m];
    b.index = static_cast<int>(m);
    b.right_vector.resize(d);
    b.left_vector.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      b.right_vector[i] = es.right(i, m);
      b.left_vector[i] = es.left(i, m);
    }
    cplx denom = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      denom += std::conj(b.left_vector[i]) * b.right_vector[i];
    b.condition = std::abs(denom);

    std::vector<std::pair<cplx, cplx>> s1(nodes_t.size()), s2(nodes_tb.size());
    for (std::size_t k = 0; k < nodes_t.size(); ++k)
      s1[k] = {nodes_t[k], rayleigh(t_samples[k], b.right_vector, b.left_vector, denom)};
    for (std::size_t k = 0; k < nodes_tb.size(); ++k)
      s2[k] = {nodes_tb[k], rayleigh(tb_samples[k], b.right_vector, b.left_vector, denom)};
    b.lambda = interpolate(s1, grid_t);
    b.lambda_bar = interpolate(s2, grid_tb);

    // residual ||t(u0) v - Lambda(u0) v|| / (1 + ||t(u0)||)
    cplx lam0 = b.lambda.eval(opt.anchor_u0);
    double num = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      cplx acc = 0.0;
      for (std::size_t j = 0; j < d; ++j) acc += t0(i, j) * b.right_vector[j];
      num += std::norm(acc - lam0 * b.right_vector[i]);
    }
    b.anchor_residual = std::sqrt(num) / (1.0 + t0.frobenius_norm());
  }
  return out;
}

bool RelationReport::all_pass(double) const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RelationCheck& c) { return c.pass; });
}

double RelationReport::worst() const {
  double w = 0.0;
  for (const auto& c : checks) w = std::max(w, c.residual);
  return w;
}

namespace {

RelationCheck rel(const std::string& id, cplx point, cplx lhs, cplx rhs, double tol) {
  double res = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
  return {id, point, lhs, rhs, res, res < tol};
}

cplx prod_theta(const ChainSpec& spec, const std::function<cplx(cplx)>& f) {
  cplx out = 1.0;
  for (cplx t : spec.theta) out *= f(t);
  return out;
}

cplx coeff_or_zero(const Poly& p, int k) {
  return p.coeffs().size() > static_cast<std::size_t>(k) ? p.coeffs()[k] : cplx(0.0);
}

}  // namespace

RelationReport certify_periodic(const EigenBranch& b, const ChainSpec& spec, double tol) {
  using rmatrix::rho0_tilde;
  using rmatrix::wa;
  using rmatrix::we;
  RelationReport rep;
  rep.branch_index = b.index;
  const Poly& L = b.lambda;
  const Poly& Lb = b.lambda_bar;
  for (cplx tj : spec.theta) {
    rep.checks.push_back(rel(
        "futpl-1", tj, L.eval(tj) * L.eval(tj - 3.0),
        prod_theta(spec, [&](cplx ti) { return wa(tj - ti) * we(tj - ti - 3.0); }), tol));
    rep.checks.push_back(rel(
        "futpl-2", tj, L.eval(tj) * L.eval(tj - 1.0),
        prod_theta(spec, [&](cplx ti) { return (tj - ti + 1.0) * rho0_tilde(tj - ti); }) *
            Lb.eval(tj - 0.5), tol));
    rep.checks.push_back(rel(
        "futpl-6", tj, L.eval(tj) * Lb.eval(tj - 2.5),
        prod_theta(spec, [&](cplx ti) { return tj - ti + 3.0; }) * L.eval(tj - 2.0), tol));
  }
  const int n = spec.n_sites;
  rep.checks.push_back(rel("tpjixiandian", cplx(0.0), coeff_or_zero(L, 2 * n), 4.0, tol));
  rep.checks.push_back(rel("Asym-2", cplx(0.0), coeff_or_zero(Lb, n), 5.0, tol));
  return rep;
}

RelationReport certify_open(const EigenBranch& b, const ChainSpec& spec, double tol) {
  using boundary::h;
  using boundary::h_tilde;
  using rmatrix::rho0_tilde;
  using rmatrix::rho1;
  using rmatrix::wa;
  using rmatrix::we;
  if (spec.periodic())
    throw std::invalid_argument("certify_open: spec is periodic");
  const auto& p = *spec.bnd;
  RelationReport rep;
  rep.branch_index = b.index;
  const Poly& L = b.lambda;
  const Poly& Lb = b.lambda_bar;
  const int n = spec.n_sites;

  for (cplx base : spec.theta)
    for (double sgn : {1.0, -1.0}) {
      const cplx tj = sgn * base;
      {
        cplx pref = (1.0 / 16.0) *
                    ((tj - 1.0) * (tj - 3.0) * (tj + 1.0) * (tj + 3.0)) /
                    ((tj - 1.5) * (tj - 0.5) * (tj + 1.5) * (tj + 0.5));
        cplx rhs = pref * h(tj, p) * h_tilde(tj, p) *
                   prod_theta(spec, [&](cplx ti) {
                     return wa(tj - ti) * wa(tj + ti) * we(tj - ti - 3.0) *
                            we(tj + ti - 3.0);
                   });
        rep.checks.push_back(rel("fetpp-1", tj, L.eval(tj) * L.eval(tj - 3.0), rhs, tol));
      }
      {
        cplx pref = ((tj - 1.0) * (tj + 1.0) * (tj + 1.0) * (tj + 3.0)) /
                    ((tj - 0.5) * (tj + 0.5) * (tj + 1.5) * (tj + 2.5));
        cplx rhs = pref *
                   prod_theta(spec, [&](cplx ti) {
                     return (tj - ti + 1.0) * (tj + ti + 1.0) * rho0_tilde(tj - ti) *
                            rho0_tilde(tj + ti);
                   }) *
                   Lb.eval(tj - 0.5);
        rep.checks.push_back(rel("fetpp-2", tj, L.eval(tj) * L.eval(tj - 1.0), rhs, tol));
      }
      {
        cplx pref = (1.0 / 16.0) * ((tj - 2.5) * (tj + 3.0)) / ((tj - 1.0) * (tj + 1.5));
        cplx rhs = pref * h(tj, p) * h_tilde(tj, p) *
                   prod_theta(spec, [&](cplx ti) {
                     return (tj - ti + 3.0) * (tj + ti + 3.0);
                   }) *
                   L.eval(tj - 2.0);
        rep.checks.push_back(rel("fetpp-7", tj, L.eval(tj) * Lb.eval(tj - 2.5), rhs, tol));
      }
    }

  rep.checks.push_back(rel("fetpp-8", cplx(0.0), coeff_or_zero(L, 4 * n + 2),
                           -(4.0 + 2.0 * p.c1 * p.c2_t + 2.0 * p.c2 * p.c1_t), tol));
  const cplx val0 =
      4.0 * p.zeta * p.zeta_t * prod_theta(spec, [&](cplx ti) { return rho1(-ti); });
  rep.checks.push_back(rel("fetpp-9", cplx(0.0), L.eval(0.0), val0, tol));
  rep.checks.push_back(rel("fetpp-10", cplx(-3.0), L.eval(-3.0), val0, tol));

  const cplx mix = 2.0 + p.c1 * p.c2_t + p.c2 * p.c1_t;
  rep.checks.push_back(rel("fetpp-11", cplx(0.0), coeff_or_zero(Lb, 2 * n + 4),
                           mix * mix + (1.0 + p.c1 * p.c2) * (1.0 + p.c1_t * p.c2_t),
                           tol));
  const cplx valb = (5.0 / 16.0) * (1.0 + p.c1 * p.c2 - 4.0 * p.zeta * p.zeta) *
                    (1.0 + p.c1_t * p.c2_t - 4.0 * p.zeta_t * p.zeta_t) *
                    prod_theta(spec, [&](cplx ti) { return (2.5 - ti) * (2.5 + ti); });
  rep.checks.push_back(rel("fetpp-12", cplx(0.0), Lb.eval(0.0), valb, tol));
  rep.checks.push_back(rel("fetpp-13", cplx(-3.0), Lb.eval(-3.0), valb, tol));

  const cplx fac = (5.0 / 4.0) * p.zeta * p.zeta_t /
                   prod_theta(spec, [&](cplx ti) { return (1.0 - ti) * (1.0 + ti); });
  rep.checks.push_back(
      rel("fetpp-14", cplx(-0.5), Lb.eval(-0.5), fac * L.eval(-1.0), tol));
  rep.checks.push_back(
      rel("fetpp-15", cplx(-2.5), Lb.eval(-2.5), fac * L.eval(-2.0), tol));
  return rep;
}

}  // namespace sp4::spectra

#include "sp4/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sp4/boundary.hpp"
#include "sp4/rmatrix.hpp"

namespace sp4::bethe {

using boundary::BoundaryParams;
using rmatrix::rho0_tilde;
using rmatrix::rho1;
using rmatrix::wa;
using rmatrix::wb;
using rmatrix::we;
using transfer::ChainSpec;

cplx Q_periodic(cplx u, const std::vector<cplx>& roots, int m) {
  cplx out = 1.0;
  for (cplx r : roots) out *= u - r + 0.5 * static_cast<double>(m);
  return out;
}

cplx Q_open(cplx u, const std::vector<cplx>& roots, int m) {
  cplx out = 1.0;
  const double half_m = 0.5 * static_cast<double>(m);
  for (cplx r : roots) out *= (u - r + half_m) * (u + r + half_m);
  return out;
}

namespace {

// raw (pole-prone) evaluators -------------------------------------------------

cplx lam_periodic_raw(cplx u, const BetheState& st, const ChainSpec& spec) {
  const auto& r1 = st.roots1;
  const auto& r2 = st.roots2;
  cplx pa = 1.0, pb = 1.0, pe = 1.0;
  for (cplx t : spec.theta) {
    pa *= wa(u - t);
    pb *= wb(u - t);
    pe *= we(u - t);
  }
  cplx z1 = pa * Q_periodic(u - 1.0, r1, 1) / Q_periodic(u, r1, 1);
  cplx z2 = pb * Q_periodic(u + 1.0, r1, 1) * Q_periodic(u - 1.5, r2, 2) /
            (Q_periodic(u, r1, 1) * Q_periodic(u + 0.5, r2, 2));
  cplx z3 = pb * Q_periodic(u + 1.0, r1, 1) * Q_periodic(u + 2.5, r2, 2) /
            (Q_periodic(u + 2.0, r1, 1) * Q_periodic(u + 0.5, r2, 2));
  cplx z4 = pe * Q_periodic(u + 3.0, r1, 1) / Q_periodic(u + 2.0, r1, 1);
  return z1 + z2 + z3 + z4;
}

cplx lamb_periodic_raw(cplx u, const BetheState& st, const ChainSpec& spec) {
  auto Z = [&](int i, cplx x) {
    const auto& r1 = st.roots1;
    const auto& r2 = st.roots2;
    cplx p = 1.0;
    switch (i) {
      case 1:
        for (cplx t : spec.theta) p *= wa(x - t);
        return p * Q_periodic(x - 1.0, r1, 1) / Q_periodic(x, r1, 1);
      case 2:
        for (cplx t : spec.theta) p *= wb(x - t);
        return p * Q_periodic(x + 1.0, r1, 1) * Q_periodic(x - 1.5, r2, 2) /
               (Q_periodic(x, r1, 1) * Q_periodic(x + 0.5, r2, 2));
      case 3:
        for (cplx t : spec.theta) p *= wb(x - t);
        return p * Q_periodic(x + 1.0, r1, 1) * Q_periodic(x + 2.5, r2, 2) /
               (Q_periodic(x + 2.0, r1, 1) * Q_periodic(x + 0.5, r2, 2));
      default:
        for (cplx t : spec.theta) p *= we(x - t);
        return p * Q_periodic(x + 3.0, r1, 1) / Q_periodic(x + 2.0, r1, 1);
    }
  };
  cplx pref = 1.0;
  for (cplx t : spec.theta) pref *= (u - t + 1.5) * rho0_tilde(u - t + 0.5);
  cplx s = Z(1, u + 0.5) * (Z(2, u - 0.5) + Z(3, u - 0.5) + Z(4, u - 0.5)) +
           (Z(2, u + 0.5) + Z(3, u + 0.5)) * Z(4, u - 0.5);
  return s / pref;
}

struct OpenZ {
  cplx z1, z2, z3, z4, f1, f2;
  cplx sum() const { return z1 + z2 + z3 + z4 + f1 + f2; }
};

OpenZ open_terms(cplx u, const BetheState& st, const ChainSpec& spec) {
  const BoundaryParams& p = *spec.bnd;
  const auto& r1 = st.roots1;
  const auto& r2 = st.roots2;
  cplx pa = 1.0, pb = 1.0, pe = 1.0, pb1 = 1.0, pb2 = 1.0;
  for (cplx t : spec.theta) {
    pa *= wa(u - t) * wa(u + t);
    pb *= wb(u - t) * wb(u + t);
    pe *= we(u - t) * we(u + t);
    pb1 *= wb(u - t) * wb(u + t) * (u - t + 1.0) * (u + t + 1.0);
    pb2 *= wb(u - t) * wb(u + t) * (u - t + 2.0) * (u + t + 2.0);
  }
  const cplx q1 = Q_open(u, r1, 1);
  const cplx q1m = Q_open(u - 1.0, r1, 1);
  const cplx q1p = Q_open(u + 1.0, r1, 1);
  const cplx q1p2 = Q_open(u + 2.0, r1, 1);
  const cplx q1p3 = Q_open(u + 3.0, r1, 1);
  const cplx h11 = boundary::h1(u, p) * boundary::h1_tilde(u, p);
  const cplx h22 = boundary::h2(u + 3.0, p) * boundary::h2_tilde(u + 3.0, p);
  OpenZ o;
  o.z1 = 0.25 * ((u + 1.0) * (u + 3.0)) / ((u + 0.5) * (u + 1.5)) * pa * q1m / q1 * h11;
  o.z2 = 0.25 * (u * (u + 3.0)) / ((u + 0.5) * (u + 1.5)) * pb * q1p *
         Q_open(u - 1.5, r2, 2) / (q1 * Q_open(u + 0.5, r2, 2)) * h11;
  o.z3 = 0.25 * (u * (u + 3.0)) / ((u + 1.5) * (u + 2.5)) * pb * q1p *
         Q_open(u + 2.5, r2, 2) / (q1p2 * Q_open(u + 0.5, r2, 2)) * h22;
  o.z4 = 0.25 * (u * (u + 2.0)) / ((u + 1.5) * (u + 2.5)) * pe * q1p3 / q1p2 * h22;
  o.f1 = 0.25 * (u * (u + 1.0) * (u + 3.0)) / (u + 1.5) * pb1 *
         Q_open(u - 0.5, r2, 2) * Q_open(u - 1.5, r2, 2) / q1 * h11 * st.x;
  o.f2 = 0.25 * (u * (u + 2.0) * (u + 3.0)) / (u + 1.5) * pb2 *
         Q_open(u + 1.5, r2, 2) * Q_open(u + 2.5, r2, 2) / q1p2 * h22 * st.x;
  return o;
}

cplx lam_open_raw(cplx u, const BetheState& st, const ChainSpec& spec) {
  return open_terms(u, st, spec).sum();
}

cplx lamb_open_raw(cplx u, const BetheState& st, const ChainSpec& spec) {
  OpenZ zp = open_terms(u + 0.5, st, spec);
  OpenZ zm = open_terms(u - 0.5, st, spec);
  cplx s = zp.z1 * (zm.z2 + zm.z3 + zm.z4 + zm.f2) +
           (zp.z2 + zp.z3 + zp.f1) * zm.z4 + zp.z2 * zm.f2 + zp.f1 * zm.z3 +
           zp.f1 * zm.f2;
  cplx pref = 1.0;
  for (cplx t : spec.theta)
    pref *= (u - t + 1.5) * (u + t + 1.5) * rho0_tilde(u - t + 0.5) *
            rho0_tilde(u + t + 0.5);
  s *= (1.0 / 16.0) * rho1(2.0 * u + 3.0) /
       ((u - 0.5) * (u + 1.5) * (u + 1.5) * (u + 3.5));
  return s / pref;
}

// dangerous spectral points where the raw expressions are 0/0 or 1/0 -----------

void add_q_zeros(std::vector<cplx>& pts, const BetheState& st) {
  auto add_pair = [&](cplx z) { pts.push_back(z); };
  if (!st.open) {
    for (cplx r : st.roots1) {
      add_pair(r - 0.5);   // Q1(u)
      add_pair(r - 2.5);   // Q1(u+2)
    }
    for (cplx r : st.roots2) add_pair(r - 1.5);  // Q2(u+1/2)
  } else {
    for (cplx r : st.roots1)
      for (double sg : {1.0, -1.0}) {
        add_pair(sg * r - 0.5);
        add_pair(sg * r - 2.5);
      }
    for (cplx r : st.roots2)
      for (double sg : {1.0, -1.0}) add_pair(sg * r - 1.5);
  }
}

std::vector<cplx> lam_danger(const BetheState& st, const ChainSpec& spec) {
  std::vector<cplx> pts;
  add_q_zeros(pts, st);
  if (st.open) {
    pts.insert(pts.end(), {cplx(-0.5), cplx(-1.5), cplx(-2.5)});
  }
  (void)spec;
  return pts;
}

std::vector<cplx> lamb_danger(const BetheState& st, const ChainSpec& spec) {
  std::vector<cplx> pts;
  std::vector<cplx> base = lam_danger(st, spec);
  for (cplx z : base) {
    pts.push_back(z + 0.5);
    pts.push_back(z - 0.5);
  }
  if (st.open) {
    pts.insert(pts.end(), {cplx(0.5), cplx(-1.5), cplx(-3.5)});
    for (cplx t : spec.theta)
      for (double sg : {1.0, -1.0}) {
        pts.push_back(sg * t - 1.5);
        pts.push_back(sg * t + 0.5);
        pts.push_back(sg * t - 3.5);
      }
  } else {
    for (cplx t : spec.theta) {
      pts.push_back(t - 1.5);
      pts.push_back(t + 0.5);
    }
  }
  return pts;
}

cplx eval_safe(const std::function<cplx(cplx)>& fn, cplx u,
               const std::vector<cplx>& danger) {
  double dmin = 1e300;
  for (cplx z : danger) dmin = std::min(dmin, std::abs(u - z));
  if (dmin > 1e-4) return fn(u);
  // 4-point Lagrange extrapolation from a circle that clears the pole
  const double r = 1e-2;
  cplx num = 0.0;
  // nodes u + r i^k; Lagrange weights at the centre are 1/4 each by symmetry
  for (int k = 0; k < 4; ++k) {
    double phi = 0.5 * std::numbers::pi * static_cast<double>(k);
    num += fn(u + r * cplx(std::cos(phi), std::sin(phi)));
  }
  return 0.25 * num;
}

}  // namespace

cplx lambda_periodic_TQ(cplx u, const BetheState& st, const ChainSpec& spec) {
  return eval_safe([&](cplx z) { return lam_periodic_raw(z, st, spec); }, u,
                   lam_danger(st, spec));
}

cplx lambda_bar_periodic_TQ(cplx u, const BetheState& st, const ChainSpec& spec) {
  return eval_safe([&](cplx z) { return lamb_periodic_raw(z, st, spec); }, u,
                   lamb_danger(st, spec));
}

cplx lambda_open_TQ(cplx u, const BetheState& st, const ChainSpec& spec) {
  return eval_safe([&](cplx z) { return lam_open_raw(z, st, spec); }, u,
                   lam_danger(st, spec));
}

cplx lambda_bar_open_TQ(cplx u, const BetheState& st, const ChainSpec& spec) {
  return eval_safe([&](cplx z) { return lamb_open_raw(z, st, spec); }, u,
                   lamb_danger(st, spec));
}

std::vector<cplx> bae_periodic_residual(const BetheState& st, const ChainSpec& spec) {
  const auto& r1 = st.roots1;
  const auto& r2 = st.roots2;
  std::vector<cplx> out;
  out.reserve(r1.size() + r2.size());
  for (cplx mu : r1) {
    cplx pm = 1.0, pp = 1.0;
    for (cplx t : spec.theta) {
      pm *= mu - 0.5 - t;
      pp *= mu + 0.5 - t;
    }
    out.push_back(Q_periodic(mu + 0.5, r1, 1) * Q_periodic(mu - 2.0, r2, 2) * pm +
                  Q_periodic(mu - 1.5, r1, 1) * Q_periodic(mu, r2, 2) * pp);
  }
  for (cplx mu : r2)
    out.push_back(Q_periodic(mu + 1.0, r2, 2) * Q_periodic(mu - 1.5, r1, 1) +
                  Q_periodic(mu - 3.0, r2, 2) * Q_periodic(mu + 0.5, r1, 1));
  return out;
}

std::vector<cplx> bae_open_residual(const BetheState& st, const ChainSpec& spec) {
  if (spec.periodic())
    throw std::invalid_argument("bae_open_residual: spec is periodic");
  const int n = spec.n_sites;
  if (static_cast<int>(st.roots1.size()) != 2 * static_cast<int>(st.roots2.size()) + n + 1)
    throw std::invalid_argument("bae_open_residual: L1 != 2 L2 + N + 1");
  const auto& r1 = st.roots1;
  const auto& r2 = st.roots2;
  const BoundaryParams& p = *spec.bnd;
  std::vector<cplx> out;
  out.reserve(r1.size() + r2.size());
  for (cplx l : r1) {
    cplx pm = 1.0, pp = 1.0;
    for (cplx t : spec.theta) {
      pm *= (l - t - 0.5) * (l + t - 0.5);
      pp *= (l - t + 0.5) * (l + t + 0.5);
    }
    cplx a1 = (l + 0.5) * Q_open(l - 1.5, r1, 1) * Q_open(l, r2, 2) * pp;
    cplx a2 = (l - 0.5) * Q_open(l + 0.5, r1, 1) * Q_open(l - 2.0, r2, 2) * pm;
    cplx a3 = st.x * l * (l + 0.5) * (l - 0.5) * Q_open(l - 1.0, r2, 2) *
              Q_open(l - 2.0, r2, 2) * Q_open(l, r2, 2) * pm * pp;
    out.push_back(a1 + a2 + a3);
  }
  for (cplx l : r2) {
    cplx b1 = (l + 1.0) * Q_open(l - 3.0, r2, 2) * Q_open(l + 0.5, r1, 1) *
              boundary::h1(l - 1.5, p) * boundary::h1_tilde(l - 1.5, p);
    cplx b2 = (l - 1.0) * Q_open(l + 1.0, r2, 2) * Q_open(l - 1.5, r1, 1) *
              boundary::h2(l + 1.5, p) * boundary::h2_tilde(l + 1.5, p);
    out.push_back(b1 + b2);
  }
  return out;
}

bool root_configuration_ok(const BetheState& st) {
  const double tol = 1e-6;
  auto collide = [&](const std::vector<cplx>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (std::abs(v[i] - v[j]) < tol) return true;
        if (st.open && std::abs(v[i] + v[j]) < tol) return true;
      }
    return false;
  };
  if (collide(st.roots1) || collide(st.roots2)) return false;
  if (st.open) {
    for (cplx r : st.roots1)
      if (std::abs(r) < tol) return false;
    for (cplx r : st.roots2)
      if (std::abs(r) < tol) return false;
  }
  return true;
}

std::vector<PoleResidue> measure_pole_residues(const BetheState& st,
                                               const ChainSpec& spec) {
  std::vector<cplx> zeros;
  add_q_zeros(zeros, st);
  auto lam = [&](cplx z) {
    return st.open ? lam_open_raw(z, st, spec) : lam_periodic_raw(z, st, spec);
  };
  std::vector<PoleResidue> out;
  const double r = 1e-3;
  for (cplx z0 : zeros) {
    cplx acc = 0.0;
    double scale = 0.0;
    for (int k = 0; k < 4; ++k) {
      double phi = 0.5 * std::numbers::pi * static_cast<double>(k);
      cplx w(std::cos(phi), std::sin(phi));
      cplx fv = lam(z0 + r * w);
      acc += fv * w;
      scale = std::max(scale, std::abs(fv));
    }
    // residue ~ (r/4) sum f(z0 + r w_k) w_k for the 4-point trapezoid contour
    out.push_back({z0, std::abs(acc) * r / 4.0, scale});
  }
  return out;
}

NewtonResult newton_solve(
    const std::function<std::vector<cplx>(const std::vector<cplx>&)>& f,
    std::vector<cplx> init, const NewtonOptions& opt) {
  NewtonResult res;
  res.z = std::move(init);
  const std::size_t n = res.z.size();
  if (n == 0) {
    res.converged = true;
    return res;
  }
  auto norm_inf = [](const std::vector<cplx>& v) {
    double m = 0.0;
    for (cplx x : v) m = std::max(m, std::abs(x));
    return m;
  };
  for (int it = 0; it < opt.max_iter; ++it) {
    auto fv = f(res.z);
    res.residual_norm = norm_inf(fv);
    res.iterations = it;
    if (res.residual_norm < opt.tol) {
      res.converged = true;
      return res;
    }
    CMatrix jac(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      auto zp = res.z, zm = res.z;
      zp[k] += opt.fd_step;
      zm[k] -= opt.fd_step;
      auto fp = f(zp), fm = f(zm);
      for (std::size_t r = 0; r < n; ++r)
        jac(r, k) = (fp[r] - fm[r]) / (2.0 * opt.fd_step);
    }
    auto sv = singular_values(jac);
    if (sv.back() <= 0.0 || sv.front() / sv.back() > opt.max_condition) {
      res.converged = false;
      return res;  // singular Jacobian
    }
    std::vector<cplx> step;
    try {
      step = solve_linear(jac, fv);
    } catch (const std::runtime_error&) {
      res.converged = false;
      return res;
    }
    double damping = 1.0;
    std::vector<cplx> trial(n);
    for (int h = 0; h <= opt.max_halvings; ++h) {
      for (std::size_t k = 0; k < n; ++k) trial[k] = res.z[k] - damping * step[k];
      if (norm_inf(f(trial)) < res.residual_norm) break;
      damping *= 0.5;
    }
    for (std::size_t k = 0; k < n; ++k) res.z[k] -= damping * step[k];
  }
  auto fv = f(res.z);
  res.residual_norm = norm_inf(fv);
  res.converged = res.residual_norm < opt.tol;
  res.iterations = opt.max_iter;
  return res;
}

namespace {

double root_set_distance(const BetheState& a, const BetheState& b) {
  // greedy matching up to permutation and (open) sign
  auto dist_multi = [&](const std::vector<cplx>& x, const std::vector<cplx>& y) {
    if (x.size() != y.size()) return 1e300;
    std::vector<bool> used(y.size(), false);
    double worst = 0.0;
    for (cplx xv : x) {
      double best = 1e300;
      std::size_t bi = 0;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (used[j]) continue;
        double d = std::abs(xv - y[j]);
        if (a.open) d = std::min(d, std::abs(xv + y[j]));
        if (d < best) {
          best = d;
          bi = j;
        }
      }
      if (!y.empty()) used[bi] = true;
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(dist_multi(a.roots1, b.roots1), dist_multi(a.roots2, b.roots2));
}

}  // namespace

std::vector<BetheState> solve_bae(const ChainSpec& spec, int l1, int l2,
                                  const SolveOptions& opt) {
  spec.validate();
  const bool open = !spec.periodic();
  if (open && l1 != 2 * l2 + spec.n_sites + 1)
    throw std::invalid_argument("solve_bae: L1 != 2 L2 + N + 1");
  BetheState proto;
  proto.open = open;
  proto.x = open ? boundary::x_const(*spec.bnd) : cplx(0.0);

  auto residual = [&](const std::vector<cplx>& z) {
    BetheState st = proto;
    st.roots1.assign(z.begin(), z.begin() + l1);
    st.roots2.assign(z.begin() + l1, z.end());
    return open ? bae_open_residual(st, spec) : bae_periodic_residual(st, spec);
  };

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> ur(0.0, 1.0);
  std::vector<BetheState> found;
  for (int s = 0; s < opt.starts; ++s) {
    std::vector<cplx> init(l1 + l2);
    for (auto& z : init) {
      double rad = opt.disk_radius * std::sqrt(ur(rng));
      double phi = 2.0 * std::numbers::pi * ur(rng);
      z = rad * cplx(std::cos(phi), std::sin(phi));
    }
    auto nr = newton_solve(residual, init, opt.newton);
    if (!nr.converged) continue;
    BetheState st = proto;
    st.roots1.assign(nr.z.begin(), nr.z.begin() + l1);
    st.roots2.assign(nr.z.begin() + l1, nr.z.end());
    if (!root_configuration_ok(st)) continue;
    auto residues = measure_pole_residues(st, spec);
    bool poles_ok = true;
    for (const auto& pr : residues)
      if (pr.magnitude > opt.residue_tol * (1.0 + pr.scale)) poles_ok = false;
    if (!poles_ok) continue;
    bool dup = false;
    for (const auto& prev : found)
      if (root_set_distance(st, prev) < opt.dedupe_tol) dup = true;
    if (!dup) found.push_back(std::move(st));
  }
  if (l1 + l2 == 0) found.push_back(proto);  // the empty state always solves
  return found;
}

double state_branch_distance(const BetheState& st, const spectra::EigenBranch& b,
                             const ChainSpec& spec) {
  double worst = 0.0;
  for (int k = 0; k < 12; ++k) {
    double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / 12.0;
    cplx z = 3.0 * cplx(std::cos(phi), std::sin(phi));
    cplx lv = st.open ? lambda_open_TQ(z, st, spec) : lambda_periodic_TQ(z, st, spec);
    cplx bv = b.lambda.eval(z);
    worst = std::max(worst, std::abs(lv - bv) / (1.0 + std::abs(bv)));
  }
  return worst;
}

MatchReport match_spectrum(const std::vector<BetheState>& states,
                           const std::vector<spectra::EigenBranch>& branches,
                           const ChainSpec& spec, double match_tol) {
  MatchReport rep;
  rep.match_tol = match_tol;
  std::vector<bool> hit(branches.size(), false);
  for (std::size_t si = 0; si < states.size(); ++si) {
    double best = 1e300;
    int bi = -1;
    for (std::size_t j = 0; j < branches.size(); ++j) {
      double d = state_branch_distance(states[si], branches[j], spec);
      if (d < best) {
        best = d;
        bi = static_cast<int>(j);
      }
    }
    rep.entries.push_back({static_cast<int>(si), bi, best});
    if (bi >= 0 && best < match_tol) hit[bi] = true;
  }
  for (std::size_t j = 0; j < branches.size(); ++j)
    (hit[j] ? rep.matched_branches : rep.unmatched_branches).push_back(static_cast<int>(j));
  rep.coverage = branches.empty()
                     ? 0.0
                     : static_cast<double>(rep.matched_branches.size()) /
                           static_cast<double>(branches.size());
  return rep;
}

cplx energy_of_branch(const spectra::EigenBranch& b, bool open) {
  cplx l0 = b.lambda.eval(0.0);
  if (std::abs(l0) < 1e-300)
    throw std::domain_error("energy_of_branch: Lambda(0) = 0");
  cplx e = b.lambda.derivative().eval(0.0) / l0;
  return open ? 0.5 * e : e;
}

cplx energy_of_state(const BetheState& st, const ChainSpec& spec) {
  auto lam = [&](cplx z) {
    return st.open ? lambda_open_TQ(z, st, spec) : lambda_periodic_TQ(z, st, spec);
  };
  cplx l0 = lam(0.0);
  if (std::abs(l0) < 1e-300)
    throw std::domain_error("energy_of_state: Lambda(0) = 0");
  // five-point stencil for Lambda'(0)
  const double h = 1e-3;
  cplx d = (8.0 * (lam(h) - lam(-h)) - (lam(2.0 * h) - lam(-2.0 * h))) / (12.0 * h);
  cplx e = d / l0;
  return st.open ? 0.5 * e : e;
}

}  // namespace sp4::bethe

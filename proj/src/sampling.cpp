#include "sp4/sampling.hpp"

#include <cmath>

namespace sp4::sampling {

namespace {
const double kStructural[] = {0.0, 0.5, -0.5, 1.0, -1.0, 1.5, -1.5, 2.5, -2.5, 3.0, -3.0};
}

std::vector<cplx> sample_theta(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ur(-1.0, 1.0);
  std::vector<cplx> out;
  int guard = 0;
  while (static_cast<int>(out.size()) < n) {
    if (++guard > 100000)
      throw std::runtime_error("sample_theta: rejection sampling stalled");
    double cand = ur(rng);
    bool ok = true;
    for (double s : kStructural)
      if (std::abs(cand - s) < 0.05) ok = false;
    for (cplx prev : out)
      if (std::abs(cand - prev.real()) < 0.05) ok = false;
    if (ok) out.emplace_back(cand, 0.0);
  }
  return out;
}

boundary::BoundaryParams sample_boundary(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ur(-1.0, 1.0);
  for (int guard = 0; guard < 100000; ++guard) {
    boundary::BoundaryParams p;
    p.zeta = cplx(ur(rng), 0.0);
    p.c1 = cplx(ur(rng), 0.0);
    p.c2 = cplx(ur(rng), 0.0);
    p.zeta_t = cplx(ur(rng), 0.0);
    p.c1_t = cplx(ur(rng), 0.0);
    p.c2_t = cplx(ur(rng), 0.0);
    if (std::abs(1.0 + p.c1 * p.c2) < 1e-3) continue;
    if (std::abs(1.0 + p.c1_t * p.c2_t) < 1e-3) continue;
    if (std::abs(p.zeta) < 0.05 || std::abs(p.zeta_t) < 0.05) continue;
    return p;
  }
  throw std::runtime_error("sample_boundary: rejection sampling stalled");
}

cplx sample_point(std::mt19937_64& rng, double bound) {
  std::uniform_real_distribution<double> ur(-bound, bound);
  return {ur(rng), ur(rng)};
}

transfer::ChainSpec sample_spec(int n, bool open, std::mt19937_64& rng) {
  transfer::ChainSpec spec;
  spec.n_sites = n;
  spec.theta = sample_theta(n, rng);
  if (open) spec.bnd = sample_boundary(rng);
  return spec;
}

}  // namespace sp4::sampling

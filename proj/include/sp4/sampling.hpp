#ifndef SP4_SAMPLING_HPP
#define SP4_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "sp4/boundary.hpp"
#include "sp4/transfer.hpp"

// Seeded samplers for inhomogeneities, boundary parameters and spectral
// points. Real draws in [-1,1], rejected near the structural points and the
// parameter-validity boundaries, so identity suites stay well conditioned
// and runs reproduce from a single seed.

namespace sp4::sampling {

/// N pairwise distinct real inhomogeneities, min separation 0.05, at least
/// 0.05 away from {0, +-1/2, +-1, +-3/2, +-5/2, +-3}.
std::vector<cplx> sample_theta(int n, std::mt19937_64& rng);

/// Real boundary parameters in [-1,1], rejecting |1 + c1 c2| < 1e-3,
/// |1 + c1~ c2~| < 1e-3 and |zeta|, |zeta~| < 0.05.
boundary::BoundaryParams sample_boundary(std::mt19937_64& rng);

/// Random spectral point with |Re|, |Im| <= bound.
cplx sample_point(std::mt19937_64& rng, double bound = 5.0);

transfer::ChainSpec sample_spec(int n, bool open, std::mt19937_64& rng);

}  // namespace sp4::sampling

#endif

#ifndef SP4_SPECTRA_HPP
#define SP4_SPECTRA_HPP

#include <string>
#include <vector>

#include "sp4/poly.hpp"
#include "sp4/transfer.hpp"

// Simultaneous diagonalization of the commuting transfer family and
// certification of the recovered eigenvalue polynomials against the closed
// scalar conditions.

namespace sp4::spectra {

struct EigenBranch {
  int index = 0;
  std::vector<cplx> right_vector;
  std::vector<cplx> left_vector;
  Poly lambda;      // deg 2N (periodic) or 4N+2 (open)
  Poly lambda_bar;  // deg N (periodic) or 2N+4 (open)
  double condition = 0.0;  // |w^H v| biorthogonality quality
  double anchor_residual = 0.0;
};

struct BranchOptions {
  cplx anchor_u0{0.37, 0.0};
  cplx anchor_u1{1.13, 0.0};
  double radius = 3.0;
  int extra_nodes = 3;
  std::uint64_t seed = 1;  // draws the random family combination
  int max_redraws = 5;
};

/// Diagonalize a random combination alpha t(u0) + beta tbar(u1) of the
/// commuting family and recover per-branch eigenvalue polynomials through
/// biorthogonal Rayleigh quotients on a sampling grid.
/// Throws std::runtime_error when the combination stays irreducibly
/// degenerate after the configured number of redraws.
std::vector<EigenBranch> branches(const transfer::ChainSpec& spec,
                                  const BranchOptions& opt = {});

struct RelationCheck {
  std::string id;
  cplx point;
  cplx lhs, rhs;
  double residual;
  bool pass;
};

struct RelationReport {
  int branch_index = 0;
  std::vector<RelationCheck> checks;
  bool all_pass(double) const;
  double worst() const;
};

/// Periodic certification: futpl-1/2/6 at every theta_j plus the two
/// asymptotic leading coefficients (3N + 2 scalar checks).
RelationReport certify_periodic(const EigenBranch& b, const transfer::ChainSpec& spec,
                                double tol = 1e-8);

/// Open certification: the 6N product relations at +-theta_j, two asymptotic
/// coefficients, Lambda(0), Lambda(-3), Lambdabar(0), Lambdabar(-3) and the
/// two proportionality relations -- exactly 6N+8 checks.
RelationReport certify_open(const EigenBranch& b, const transfer::ChainSpec& spec,
                            double tol = 1e-7);

}  // namespace sp4::spectra

#endif

#ifndef SP4_TRANSFER_HPP
#define SP4_TRANSFER_HPP

#include <optional>
#include <string>
#include <vector>

#include "sp4/boundary.hpp"
#include "sp4/linalg.hpp"
#include "sp4/poly.hpp"

// Monodromy and transfer-matrix builders on explicit (aux (x) quantum)
// spaces, both Hamiltonians, and the operator-identity / special-value
// verification suites.

namespace sp4::transfer {

struct ChainSpec {
  int n_sites = 1;
  std::vector<cplx> theta;
  std::optional<boundary::BoundaryParams> bnd;  // absent = periodic

  bool periodic() const { return !bnd.has_value(); }

  /// Throws std::invalid_argument on inconsistent field combinations or
  /// when the Hilbert space would exceed the supported desk scale (N > 4).
  void validate() const;

  std::size_t quantum_dim() const;
};

enum class MonodromyKind { T, That, Tbar, Tbarhat };

/// Ordered product of embedded R (or fused Rbar) factors; auxiliary factor
/// first in the flattening (dim 4 for T/That, 5 for Tbar/Tbarhat).
CMatrix monodromy(cplx u, const ChainSpec& spec, MonodromyKind kind);

CMatrix t_periodic(cplx u, const ChainSpec& spec);
CMatrix tbar_periodic(cplx u, const ChainSpec& spec);
CMatrix t_open(cplx u, const ChainSpec& spec);
CMatrix tbar_open(cplx u, const ChainSpec& spec);

/// Transfer matrix of the spec (fundamental or fused auxiliary space).
CMatrix transfer(cplx u, const ChainSpec& spec, bool fused);

/// Declared polynomial degrees (deg t, deg tbar).
std::pair<int, int> transfer_degrees(const ChainSpec& spec);

/// Two-site Hamiltonian density P R'(0) (unnormalized).
CMatrix two_site_density();

/// Periodic Hamiltonian, normalized so that H_p = d/du ln t_p(u) at
/// u = 0 for the homogeneous chain (the two-site terms carry 1/rho1(0)^1/2).
CMatrix hamiltonian_periodic(int n_sites);

/// Open-boundary Hamiltonian equal to (1/2) d/du ln t(u) at u = 0 for the
/// homogeneous chain: normalized bulk terms, K^- derivative boundary term
/// M/(2 zeta) on the last site and the K^+ weighted density on the first.
CMatrix hamiltonian_open(const ChainSpec& spec);

struct IdentityCheck {
  std::string id;   // e.g. "futp-1", "ftpp-2", "t1-1", "jixian1"
  cplx point;       // evaluation point (theta_j or special value)
  double residual;  // Frobenius residual, normalized by (1 + ||RHS||)
  cplx ratio;       // measured tr(LHS)/tr(RHS) for sign diagnostics
};

/// Operator product identities: periodic futp-1/2/6 at every theta_j, open
/// ftpp-1/2/7 at both +theta_j and -theta_j.
std::vector<IdentityCheck> check_identities(const ChainSpec& spec);

/// Special values, asymptotic leading coefficients and exact-degree checks.
/// Periodic: leading 4u^{2N} / 5u^N and degrees (2N, N). Open: t(0), t(-3),
/// tbar(0), tbar(-3), tbar(-1/2) ~ t(-1), tbar(-5/2) ~ t(-2), the two
/// leading coefficients and degrees (4N+2, 2N+4).
std::vector<IdentityCheck> check_special_values(const ChainSpec& spec);

/// Interpolated eigen/entry polynomial of one matrix entry of the transfer
/// pencil, sampled on a radius-3 roots-of-unity grid with `extra` nodes
/// beyond degree+1.
Poly entry_poly(const ChainSpec& spec, bool fused, std::size_t row,
                std::size_t col, int extra = 3);

}  // namespace sp4::transfer

#endif

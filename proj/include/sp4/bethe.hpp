#ifndef SP4_BETHE_HPP
#define SP4_BETHE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sp4/spectra.hpp"
#include "sp4/transfer.hpp"

// T-Q machinery: Q-functions, the homogeneous (periodic) and inhomogeneous
// (open) T-Q relations, Bethe-equation residuals, the damped Newton solver
// and spectrum matching.

namespace sp4::bethe {

struct BetheState {
  bool open = false;
  std::vector<cplx> roots1;  // L1 entries
  std::vector<cplx> roots2;  // L2 entries
  cplx x = 0.0;              // inhomogeneous constant (open only)
};

/// Periodic Q^(m)(u) = prod_k (u - mu_k + m/2).
cplx Q_periodic(cplx u, const std::vector<cplx>& roots, int m);

/// Open (symmetrized) Q^(m)(u) = prod_k (u - l_k + m/2)(u + l_k + m/2).
cplx Q_open(cplx u, const std::vector<cplx>& roots, int m);

/// T-Q evaluators. Within 1e-4 of a Q-denominator zero (or a structural
/// pole of the open fused expression) the value is recovered by a 4-point
/// local polynomial extrapolation.
cplx lambda_periodic_TQ(cplx u, const BetheState& st, const transfer::ChainSpec& spec);
cplx lambda_bar_periodic_TQ(cplx u, const BetheState& st, const transfer::ChainSpec& spec);
cplx lambda_open_TQ(cplx u, const BetheState& st, const transfer::ChainSpec& spec);
cplx lambda_bar_open_TQ(cplx u, const BetheState& st, const transfer::ChainSpec& spec);

/// Cross-multiplied Bethe-equation residuals (one entry per root).
std::vector<cplx> bae_periodic_residual(const BetheState& st, const transfer::ChainSpec& spec);
std::vector<cplx> bae_open_residual(const BetheState& st, const transfer::ChainSpec& spec);

/// True when no two roots (or sign-partners, open) coincide and, for the
/// open case, no root sits at the origin. States failing this are the
/// spurious fixed points of the cross-multiplied equations.
bool root_configuration_ok(const BetheState& st);

struct PoleResidue {
  cplx at;          // Q-zero location in the spectral plane
  double magnitude; // 4-point contour estimate of |residue|
  double scale;     // max |Lambda| on the contour
};

/// Contour residue estimates of Lambda at every Q-denominator zero.
std::vector<PoleResidue> measure_pole_residues(const BetheState& st,
                                               const transfer::ChainSpec& spec);

struct NewtonOptions {
  double tol = 1e-10;
  int max_iter = 200;
  double fd_step = 1e-6;
  int max_halvings = 20;
  double max_condition = 1e12;
};

struct NewtonResult {
  std::vector<cplx> z;
  bool converged = false;
  int iterations = 0;
  double residual_norm = 0.0;
};

NewtonResult newton_solve(
    const std::function<std::vector<cplx>(const std::vector<cplx>&)>& f,
    std::vector<cplx> init, const NewtonOptions& opt = {});

struct SolveOptions {
  int starts = 64;
  double disk_radius = 4.0;
  std::uint64_t seed = 1;
  NewtonOptions newton;
  double dedupe_tol = 1e-6;
  double residue_tol = 1e-6;  // pole-cancellation filter, relative to scale
};

/// Multi-start Bethe solve at fixed (L1, L2). Converged states are filtered
/// for valid root configurations and pole cancellation, then deduplicated by
/// root-set distance up to permutation (and sign, open).
std::vector<BetheState> solve_bae(const transfer::ChainSpec& spec, int l1, int l2,
                                  const SolveOptions& opt = {});

struct MatchEntry {
  int state_index;
  int branch_index;
  double distance;  // max-norm on the 12-point probe grid, relative
};

struct MatchReport {
  std::vector<MatchEntry> entries;
  std::vector<int> matched_branches;    // distance < match_tol
  std::vector<int> unmatched_branches;
  double coverage = 0.0;                // matched / total branches
  double match_tol = 1e-6;
};

MatchReport match_spectrum(const std::vector<BetheState>& states,
                           const std::vector<spectra::EigenBranch>& branches,
                           const transfer::ChainSpec& spec, double match_tol = 1e-6);

/// Probe-grid distance between the state's T-Q evaluation and a branch.
double state_branch_distance(const BetheState& st, const spectra::EigenBranch& b,
                             const transfer::ChainSpec& spec);

/// Logarithmic derivative of Lambda at 0: Lambda'(0)/Lambda(0) for periodic
/// branches/states, (1/2) Lambda'(0)/Lambda(0) for open ones.
cplx energy_of_branch(const spectra::EigenBranch& b, bool open);
cplx energy_of_state(const BetheState& st, const transfer::ChainSpec& spec);

}  // namespace sp4::bethe

#endif

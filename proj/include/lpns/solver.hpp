#pragma once

#include "lpns/stokes.hpp"

namespace lpns {

struct SolverConfig {
  double nu = 1.0;
  double T = 1.0;
  int n_t = 65;
  BesovIndex idx{0.0, MixedExponent::uniform(2, 2.0), 2.0, NormFlavor::besov};
  double k_hat = 0.0;    // measured bilinear constant (0 disables epsilon checks)
  double epsilon = 0.0;  // smallness budget; must stay below 1/(4 k_hat)
  int max_iters = 40;
  double tol_residual = 1e-8;
  /// Besov-norm gate on the initial data; <= 0 disables the gate.
  double smallness_limit = 0.0;
  /// Apply the Leray projector to non-solenoidal input instead of rejecting it.
  bool project = false;
  int oracle_substeps = 1;

  SemigroupParams semigroup() const { return {nu}; }
  double dt() const { return T / (n_t - 1); }
  void validate() const;
};

/// Free evolution z0 = S_nu(t) u0 sampled on the solver time grid. The input
/// must be mean-free, spectrally inside the covered band, and divergence-free
/// (up to 1e-10 relative) unless cfg.project is set.
Trajectory heat_trajectory(const RealField& u0, const SolverConfig& cfg,
                           const FilterBank& bank);

struct SolverState {
  std::vector<double> residual_history;  // relative Z-norm residual per iteration
  std::vector<double> z_norm_history;    // ||u^n||_Z per iteration
  double z0_norm = 0.0;
  double final_norm = 0.0;
  double max_contraction_ratio = 0.0;  // max ratio of consecutive absolute residuals
  bool norm_bound_ok = false;          // ||u||_Z <= 2 ||z0||_Z (1 + 1e-6)
  int iterations = 0;
};

struct SolveResult {
  Trajectory solution;
  SolverState state;
  bool converged = false;
};

/// Picard iteration u^0 = z0, u^{n+1} = z0 + B(u^n, u^n), stopping on the
/// relative Z-norm residual. Three consecutive residual increases abort with a
/// divergence error.
SolveResult picard_solve(const RealField& u0, const SolverConfig& cfg,
                         const FilterBank& bank);

/// Lipschitz dependence on the data: solves for both inputs and checks
/// ||u - u~||_Z <= (1 - 4 K eps)^-1 ||z0 - z0~||_Z with the measured epsilon.
CheckReport continuity_check(const RealField& u0, const RealField& u0_tilde,
                             const SolverConfig& cfg, const FilterBank& bank);

/// Independent reference: integrating-factor RK4 on the spectral velocity form,
/// sampled on the same grid and horizon. Substeps refine each trajectory step.
Trajectory rk4_oracle(const RealField& u0, const SolverConfig& cfg);

/// max_t ||a(t) - b(t)||_2 / max_t ||a(t)||_2.
double trajectory_linf_l2_distance(const Trajectory& a, const Trajectory& b);

}  // namespace lpns

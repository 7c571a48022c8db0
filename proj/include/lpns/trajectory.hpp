#pragma once

#include <vector>

#include "lpns/besov.hpp"

namespace lpns {

/// Uniformly sampled velocity trajectory on [0, (size-1)*dt]. States share a
/// grid; nu is the viscosity the trajectory evolves under.
class Trajectory {
 public:
  Trajectory(double dt, std::vector<RealField> states, double nu);

  int size() const { return static_cast<int>(states_.size()); }
  double dt() const { return dt_; }
  double time(int j) const { return j * dt_; }
  double horizon() const { return (size() - 1) * dt_; }
  double nu() const { return nu_; }

  const Grid& grid() const { return states_.front().grid(); }
  int components() const { return states_.front().components(); }

  const RealField& state(int j) const { return states_[static_cast<std::size_t>(j)]; }
  RealField& state(int j) { return states_[static_cast<std::size_t>(j)]; }
  const std::vector<RealField>& states() const { return states_; }

 private:
  double dt_;
  double nu_;
  std::vector<RealField> states_;
};

/// Chemin-Lerner style time-space norm: the time norm is taken per dyadic
/// block first (max over samples for a = inf, trapezoidal rule for a = 1),
/// then the 2^(l sigma) weight and the l^q sum over blocks.
double timespace_norm(const Trajectory& traj, const BesovIndex& idx, double a,
                      const FilterBank& bank);
double timespace_norm(const std::vector<SpectralField>& spectra, double dt,
                      const BesovIndex& idx, double a, const FilterBank& bank);

struct ZNormParts {
  double linf_part = 0.0;
  double l1_part = 0.0;
  double total = 0.0;
};

/// Z-norm of the fixed-point space: max of the L^inf part at sigma and the
/// L^1 part at sigma + 2.
ZNormParts z_norm(const Trajectory& traj, const BesovIndex& idx, const FilterBank& bank);
ZNormParts z_norm(const std::vector<SpectralField>& spectra, double dt,
                  const BesovIndex& idx, const FilterBank& bank);

}  // namespace lpns

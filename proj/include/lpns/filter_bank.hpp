#pragma once

#include <vector>

#include "lpns/check.hpp"
#include "lpns/field.hpp"

namespace lpns {

/// Dyadic frequency decomposition on a fixed grid. The radial profile is a
/// smooth bump supported exactly on the annulus [3/4, 8/3], normalized by the
/// telescoping sum over dyadic dilates so that sum_l phi_l(eta) = 1 for every
/// eta covered by the resolved band. Banks are immutable after construction.
class FilterBank {
 public:
  static constexpr double annulus_inner = 0.75;
  static constexpr double annulus_outer = 8.0 / 3.0;

  static FilterBank build(const Grid& grid);

  const Grid& grid() const { return grid_; }
  int l_min() const { return l_min_; }
  int l_max() const { return l_max_; }
  int bands() const { return l_max_ - l_min_ + 1; }

  /// Tabulated multiplier phi_l on the lattice; l must lie in [l_min, l_max].
  const Eigen::ArrayXd& phi(int l) const;

  /// Low-pass multiplier zeta_l = sum_{l_min <= l' <= min(l-1, l_max)} phi_l'.
  /// Defined for every integer l; below l_min it is identically zero.
  const Eigen::ArrayXd& zeta(int l) const;

  /// Band fully covered by the resolved blocks: [ (8/3) 2^l_min, (3/4) 2^l_max ].
  double covered_lo() const;
  double covered_hi() const;

  /// Radial pieces, exposed so the profile stays a swappable, testable choice.
  static double bump(double r);
  static double profile(double r);

 private:
  FilterBank(Grid grid) : grid_(grid) {}

  Grid grid_;
  int l_min_ = 0;
  int l_max_ = -1;
  std::vector<Eigen::ArrayXd> phi_;
  std::vector<Eigen::ArrayXd> zeta_;  // indexed l_min .. l_max+1
  Eigen::ArrayXd zero_;
};

/// Dyadic block idft(phi_l dft(g)).
RealField block(const FilterBank& bank, const RealField& g, int l);
SpectralField block_spectrum(const FilterBank& bank, const SpectralField& G, int l);

/// Low-pass idft(zeta_l dft(g)); empty sum below l_min gives the zero field.
RealField low_pass(const FilterBank& bank, const RealField& g, int l);

/// Almost-orthogonality of the block operators: composed blocks vanish for
/// |l - l'| >= 2 and blocks of paraproduct terms vanish for |l - l'| >= 5.
/// Adjacent pairs are reported without assertion.
std::vector<CheckReport> almost_orthogonality_check(const FilterBank& bank,
                                                    const RealField& f,
                                                    const RealField& g);

}  // namespace lpns

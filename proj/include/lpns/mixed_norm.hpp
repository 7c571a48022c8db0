#pragma once

#include <limits>
#include <vector>

#include "lpns/check.hpp"
#include "lpns/field.hpp"

namespace lpns {

/// Ordered tuple of Lebesgue exponents, one per axis, each in [1, inf].
class MixedExponent {
 public:
  static constexpr double inf = std::numeric_limits<double>::infinity();

  explicit MixedExponent(std::vector<double> entries);
  static MixedExponent uniform(int d, double p);

  int size() const { return static_cast<int>(entries_.size()); }
  double operator[](int i) const { return entries_[i]; }
  const std::vector<double>& entries() const { return entries_; }

  bool operator==(const MixedExponent& o) const { return entries_ == o.entries_; }

 private:
  std::vector<double> entries_;
};

/// Iterated mixed norm with axis 0 innermost: reduce axis 0 with exponent p_0
/// and weight L_0/n_0, then axis 1, and so on. Infinite entries take the exact
/// max along that axis. Vector fields are reduced to their pointwise Euclidean
/// magnitude first.
double mixed_norm(const RealField& f, const MixedExponent& p);

/// Same iterated norm on the frequency lattice: modulus of the coefficients,
/// per-axis weights 2*pi/L_i.
double mixed_norm(const SpectralField& F, const MixedExponent& p);

/// Entrywise conjugate: 1/p + 1/p' = 1, with 1 <-> inf at the endpoints.
MixedExponent conjugate_exponent(const MixedExponent& p);

/// Circular convolution with the physical quadrature weight attached,
/// (phi * g)(x) = sum_y phi(y) g(x - y) prod(L_i/n_i), evaluated spectrally.
RealField circular_convolve(const RealField& phi, const RealField& g);

/// ||f g||_{p3} <= ||f||_{p1} ||g||_{p2} with 1/p3 = 1/p1 + 1/p2 entrywise.
CheckReport holder_product_check(const RealField& f, const RealField& g,
                                 const MixedExponent& p1, const MixedExponent& p2);

/// ||phi * g||_p <= ||phi||_1 ||g||_p.
CheckReport young_convolution_check(const RealField& phi, const RealField& g,
                                    const MixedExponent& p);

/// ||dft(f)||_{p'} <= ||f||_p for exponents ordered 1 <= p_d <= ... <= p_1 <= 2.
CheckReport hausdorff_young_check(const RealField& f, const MixedExponent& p);

}  // namespace lpns

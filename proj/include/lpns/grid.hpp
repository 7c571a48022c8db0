#pragma once

#include <array>
#include <cstddef>

#include "lpns/errors.hpp"

namespace lpns {

/// Periodic sampling grid on [0, L_0) x ... x [0, L_{d-1}) with n_i points per
/// axis. Axis 0 varies fastest in memory. The frequency lattice per axis is
/// eta = 2*pi*k/L_i with k in [-n_i/2, n_i/2); the index k = -n_i/2 is the
/// Nyquist index and is zeroed by every multiplier operation.
class Grid {
 public:
  Grid(int dim, std::array<int, 3> points, std::array<double, 3> period);

  /// Same point count and period on every axis.
  static Grid uniform(int dim, int points, double period);

  int dim() const { return dim_; }
  int points(int axis) const { return n_[axis]; }
  double period(int axis) const { return length_[axis]; }
  std::size_t size() const { return size_; }

  double spacing(int axis) const { return length_[axis] / n_[axis]; }
  /// Physical quadrature weight per sample, prod_i L_i/n_i.
  double cell_volume() const;
  double freq_step(int axis) const;
  /// Frequency quadrature weight per lattice point, prod_i 2*pi/L_i.
  double freq_cell() const;

  /// Signed lattice index for storage index m: m for m < n/2, m - n otherwise.
  int freq_index(int axis, int m) const {
    return m < (n_[axis] + 1) / 2 ? m : m - n_[axis];
  }
  double eta(int axis, int m) const { return freq_step(axis) * freq_index(axis, m); }
  bool nyquist(int axis, int m) const { return 2 * m == n_[axis]; }

  std::size_t stride(int axis) const;
  /// Storage index of the mirrored lattice point (-k mod n per axis).
  std::size_t mirror_index(std::size_t flat) const;

  /// Smallest and largest |eta| over nonzero, non-Nyquist lattice points.
  double min_frequency() const;
  double max_frequency() const;

  bool operator==(const Grid& other) const;
  bool operator!=(const Grid& other) const { return !(*this == other); }

 private:
  int dim_;
  std::array<int, 3> n_;
  std::array<double, 3> length_;
  std::size_t size_;
};

/// Visits every lattice point in storage order. The callback receives the flat
/// index, the frequency vector, and whether any axis sits at its Nyquist index.
template <class F>
void for_each_mode(const Grid& g, F&& fn) {
  const int d = g.dim();
  const int n0 = g.points(0);
  const int n1 = d > 1 ? g.points(1) : 1;
  const int n2 = d > 2 ? g.points(2) : 1;
  std::array<double, 3> eta{0.0, 0.0, 0.0};
  std::size_t flat = 0;
  for (int m2 = 0; m2 < n2; ++m2) {
    if (d > 2) eta[2] = g.eta(2, m2);
    const bool ny2 = d > 2 && g.nyquist(2, m2);
    for (int m1 = 0; m1 < n1; ++m1) {
      if (d > 1) eta[1] = g.eta(1, m1);
      const bool ny12 = ny2 || (d > 1 && g.nyquist(1, m1));
      for (int m0 = 0; m0 < n0; ++m0, ++flat) {
        eta[0] = g.eta(0, m0);
        fn(flat, eta, ny12 || g.nyquist(0, m0));
      }
    }
  }
}

}  // namespace lpns

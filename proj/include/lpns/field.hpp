#pragma once

#include <Eigen/Core>
#include <complex>

#include "lpns/grid.hpp"

namespace lpns {

/// Sampled real vector field. Storage is component-major: component c occupies
/// the contiguous slab [c*grid.size(), (c+1)*grid.size()), axis 0 fastest.
/// Fields are value types; operations never mutate their inputs.
class RealField {
 public:
  RealField(Grid grid, int components);

  const Grid& grid() const { return grid_; }
  int components() const { return components_; }

  Eigen::ArrayXd& data() { return data_; }
  const Eigen::ArrayXd& data() const { return data_; }

  Eigen::Map<Eigen::ArrayXd> component(int c);
  Eigen::Map<const Eigen::ArrayXd> component(int c) const;

  double& operator()(int c, std::size_t i) { return data_[offset(c) + i]; }
  double operator()(int c, std::size_t i) const { return data_[offset(c) + i]; }

  bool all_finite() const { return data_.isFinite().all(); }

  /// Pointwise Euclidean magnitude across components (a scalar field's data).
  Eigen::ArrayXd pointwise_magnitude() const;

 private:
  std::size_t offset(int c) const { return static_cast<std::size_t>(c) * grid_.size(); }

  Grid grid_;
  int components_;
  Eigen::ArrayXd data_;
};

/// Discrete Fourier coefficients of a field, same layout as RealField.
class SpectralField {
 public:
  SpectralField(Grid grid, int components);

  const Grid& grid() const { return grid_; }
  int components() const { return components_; }

  Eigen::ArrayXcd& data() { return data_; }
  const Eigen::ArrayXcd& data() const { return data_; }

  Eigen::Map<Eigen::ArrayXcd> component(int c);
  Eigen::Map<const Eigen::ArrayXcd> component(int c) const;

  std::complex<double>& operator()(int c, std::size_t i) { return data_[offset(c) + i]; }
  std::complex<double> operator()(int c, std::size_t i) const { return data_[offset(c) + i]; }

 private:
  std::size_t offset(int c) const { return static_cast<std::size_t>(c) * grid_.size(); }

  Grid grid_;
  int components_;
  Eigen::ArrayXcd data_;
};

RealField operator+(const RealField& a, const RealField& b);
RealField operator-(const RealField& a, const RealField& b);
RealField operator*(double s, const RealField& f);
RealField operator*(const RealField& f, double s);
/// Pointwise product of scalar fields.
RealField operator*(const RealField& a, const RealField& b);

SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(double s, const SpectralField& f);

/// Quadrature-weighted L2 norm over all components.
double l2_norm(const RealField& f);
double l2_norm(const SpectralField& f);
double linf_norm(const RealField& f);

void require_same_grid(const RealField& a, const RealField& b);

/// Builds a field by evaluating fn(component, x) at every sample point.
template <class F>
RealField sample_field(const Grid& g, int components, F&& fn) {
  RealField out(g, components);
  const int n0 = g.points(0);
  const int n1 = g.dim() > 1 ? g.points(1) : 1;
  const int n2 = g.dim() > 2 ? g.points(2) : 1;
  for (int c = 0; c < components; ++c) {
    std::size_t flat = 0;
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (int m2 = 0; m2 < n2; ++m2) {
      if (g.dim() > 2) x[2] = m2 * g.spacing(2);
      for (int m1 = 0; m1 < n1; ++m1) {
        if (g.dim() > 1) x[1] = m1 * g.spacing(1);
        for (int m0 = 0; m0 < n0; ++m0, ++flat) {
          x[0] = m0 * g.spacing(0);
          out(c, flat) = fn(c, x);
        }
      }
    }
  }
  return out;
}

}  // namespace lpns

#include "lpns/field.hpp"

#include <cmath>

namespace lpns {

RealField::RealField(Grid grid, int components)
    : grid_(grid), components_(components) {
  if (components_ < 1) throw ShapeError("field needs at least one component");
  data_ = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(components_ * grid_.size()));
}

Eigen::Map<Eigen::ArrayXd> RealField::component(int c) {
  return {data_.data() + offset(c), static_cast<Eigen::Index>(grid_.size())};
}

Eigen::Map<const Eigen::ArrayXd> RealField::component(int c) const {
  return {data_.data() + offset(c), static_cast<Eigen::Index>(grid_.size())};
}

Eigen::ArrayXd RealField::pointwise_magnitude() const {
  if (components_ == 1) return component(0).abs();
  Eigen::ArrayXd mag = component(0).square();
  for (int c = 1; c < components_; ++c) mag += component(c).square();
  return mag.sqrt();
}

SpectralField::SpectralField(Grid grid, int components)
    : grid_(grid), components_(components) {
  if (components_ < 1) throw ShapeError("field needs at least one component");
  data_ = Eigen::ArrayXcd::Zero(static_cast<Eigen::Index>(components_ * grid_.size()));
}

Eigen::Map<Eigen::ArrayXcd> SpectralField::component(int c) {
  return {data_.data() + offset(c), static_cast<Eigen::Index>(grid_.size())};
}

Eigen::Map<const Eigen::ArrayXcd> SpectralField::component(int c) const {
  return {data_.data() + offset(c), static_cast<Eigen::Index>(grid_.size())};
}

void require_same_grid(const RealField& a, const RealField& b) {
  if (a.grid() != b.grid()) throw ShapeError("fields live on different grids");
}

RealField operator+(const RealField& a, const RealField& b) {
  require_same_grid(a, b);
  if (a.components() != b.components()) throw ShapeError("component count mismatch");
  RealField out = a;
  out.data() += b.data();
  return out;
}

RealField operator-(const RealField& a, const RealField& b) {
  require_same_grid(a, b);
  if (a.components() != b.components()) throw ShapeError("component count mismatch");
  RealField out = a;
  out.data() -= b.data();
  return out;
}

RealField operator*(double s, const RealField& f) {
  RealField out = f;
  out.data() *= s;
  return out;
}

RealField operator*(const RealField& f, double s) { return s * f; }

RealField operator*(const RealField& a, const RealField& b) {
  require_same_grid(a, b);
  if (a.components() != 1 || b.components() != 1)
    throw ShapeError("pointwise product expects scalar fields");
  RealField out = a;
  out.data() *= b.data();
  return out;
}

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
  if (a.grid() != b.grid() || a.components() != b.components())
    throw ShapeError("spectral field mismatch");
  SpectralField out = a;
  out.data() += b.data();
  return out;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
  if (a.grid() != b.grid() || a.components() != b.components())
    throw ShapeError("spectral field mismatch");
  SpectralField out = a;
  out.data() -= b.data();
  return out;
}

SpectralField operator*(double s, const SpectralField& f) {
  SpectralField out = f;
  out.data() *= s;
  return out;
}

double l2_norm(const RealField& f) {
  return std::sqrt(f.data().square().sum() * f.grid().cell_volume());
}

double l2_norm(const SpectralField& f) {
  return std::sqrt(f.data().abs2().sum() * f.grid().freq_cell());
}

double linf_norm(const RealField& f) { return f.data().abs().maxCoeff(); }

}  // namespace lpns

#include "lpns/grid.hpp"

#include <cmath>
#include <numbers>

namespace lpns {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Grid::Grid(int dim, std::array<int, 3> points, std::array<double, 3> period)
    : dim_(dim), n_(points), length_(period) {
  if (dim_ != 2 && dim_ != 3) throw ShapeError("grid dimension must be 2 or 3");
  size_ = 1;
  for (int a = 0; a < dim_; ++a) {
    if (n_[a] < 8 || !power_of_two(n_[a]))
      throw ShapeError("points per axis must be a power of two >= 8");
    if (!(length_[a] > 0.0)) throw ShapeError("period must be positive");
    size_ *= static_cast<std::size_t>(n_[a]);
  }
  for (int a = dim_; a < 3; ++a) {
    n_[a] = 1;
    length_[a] = 1.0;
  }
}

Grid Grid::uniform(int dim, int points, double period) {
  return Grid(dim, {points, points, points}, {period, period, period});
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim_; ++a) v *= spacing(a);
  return v;
}

double Grid::freq_step(int axis) const {
  return 2.0 * std::numbers::pi / length_[axis];
}

double Grid::freq_cell() const {
  double v = 1.0;
  for (int a = 0; a < dim_; ++a) v *= freq_step(a);
  return v;
}

std::size_t Grid::stride(int axis) const {
  std::size_t s = 1;
  for (int a = 0; a < axis; ++a) s *= static_cast<std::size_t>(n_[a]);
  return s;
}

std::size_t Grid::mirror_index(std::size_t flat) const {
  std::size_t out = 0;
  std::size_t rest = flat;
  std::size_t s = 1;
  for (int a = 0; a < dim_; ++a) {
    const int na = n_[a];
    const int m = static_cast<int>(rest % na);
    rest /= na;
    const int mm = m == 0 ? 0 : na - m;
    out += static_cast<std::size_t>(mm) * s;
    s *= static_cast<std::size_t>(na);
  }
  return out;
}

double Grid::min_frequency() const {
  double lo = freq_step(0);
  for (int a = 1; a < dim_; ++a) lo = std::min(lo, freq_step(a));
  return lo;
}

double Grid::max_frequency() const {
  double s = 0.0;
  for (int a = 0; a < dim_; ++a) {
    const double e = freq_step(a) * (n_[a] / 2 - 1);
    s += e * e;
  }
  return std::sqrt(s);
}

bool Grid::operator==(const Grid& other) const {
  if (dim_ != other.dim_) return false;
  for (int a = 0; a < dim_; ++a)
    if (n_[a] != other.n_[a] || length_[a] != other.length_[a]) return false;
  return true;
}

}  // namespace lpns

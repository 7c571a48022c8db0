#pragma once

// Brute-force reference implementations, kept independent of the library's
// computation paths on purpose: the direct quadratic-cost transform and a
// nested-loop mixed norm. Only usable at small grid sizes.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lpns/field.hpp"
#include "lpns/mixed_norm.hpp"

namespace oracles {

/// Direct two-sided summation DFT of a scalar field, same normalization
/// contract as lpns::dft: (2 pi)^(-d/2) * prod(L/n) * sum f(x) e^(-i eta x).
inline std::vector<std::complex<double>> direct_dft(const lpns::RealField& f) {
  const lpns::Grid& g = f.grid();
  const int d = g.dim();
  const std::size_t n = g.size();
  std::vector<std::complex<double>> out(n);
  const double scale = std::pow(2.0 * std::numbers::pi, -0.5 * d) * g.cell_volume();

  std::vector<std::array<int, 3>> coords(n);
  {
    std::size_t flat = 0;
    for (int m2 = 0; m2 < (d > 2 ? g.points(2) : 1); ++m2)
      for (int m1 = 0; m1 < (d > 1 ? g.points(1) : 1); ++m1)
        for (int m0 = 0; m0 < g.points(0); ++m0, ++flat) coords[flat] = {m0, m1, m2};
  }

  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
      double phase = 0.0;
      for (int a = 0; a < d; ++a)
        phase += g.eta(a, coords[k][a]) * (coords[x][a] * g.spacing(a));
      acc += f(0, x) * std::exp(std::complex<double>(0.0, -phase));
    }
    out[k] = scale * acc;
  }
  return out;
}

/// Nested-loop mixed norm of a scalar field, axis 0 innermost, following the
/// iterated definition directly.
inline double brute_mixed_norm(const lpns::RealField& f, const lpns::MixedExponent& p) {
  const lpns::Grid& g = f.grid();
  const int d = g.dim();
  const int n0 = g.points(0);
  const int n1 = d > 1 ? g.points(1) : 1;
  const int n2 = d > 2 ? g.points(2) : 1;

  auto reduce = [](std::vector<double> vals, double pe, double w) {
    if (std::isinf(pe)) {
      double m = 0.0;
      for (double v : vals) m = std::max(m, v);
      return m;
    }
    double s = 0.0;
    for (double v : vals) s += std::pow(v, pe);
    return std::pow(w * s, 1.0 / pe);
  };

  std::vector<double> outer2;
  for (int m2 = 0; m2 < n2; ++m2) {
    std::vector<double> outer1;
    for (int m1 = 0; m1 < n1; ++m1) {
      std::vector<double> line;
      for (int m0 = 0; m0 < n0; ++m0) {
        const std::size_t flat = static_cast<std::size_t>(m0) +
                                 static_cast<std::size_t>(n0) * (m1 + static_cast<std::size_t>(n1) * m2);
        line.push_back(std::abs(f(0, flat)));
      }
      outer1.push_back(reduce(std::move(line), p[0], g.spacing(0)));
    }
    outer2.push_back(reduce(std::move(outer1), p[1], g.spacing(1)));
  }
  if (d == 2) return outer2[0];
  return reduce(std::move(outer2), p[2], g.spacing(2));
}

}  // namespace oracles

#include "lpns/mixed_norm.hpp"

#include <cmath>
#include <numbers>

#include "lpns/fft.hpp"

namespace lpns {

MixedExponent::MixedExponent(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ExponentError("exponent tuple is empty");
  for (double p : entries_)
    if (!(p >= 1.0)) throw ExponentError("every exponent must be >= 1");
}

MixedExponent MixedExponent::uniform(int d, double p) {
  return MixedExponent(std::vector<double>(static_cast<std::size_t>(d), p));
}

namespace {

// Reduces the fastest axis of `vals` (line length na) with exponent p and
// per-sample weight w, writing results in place at the front of the buffer.
void reduce_axis(std::vector<double>& vals, std::size_t lines, int na, double p, double w) {
  for (std::size_t i = 0; i < lines; ++i) {
    const double* line = vals.data() + i * static_cast<std::size_t>(na);
    double r;
    if (std::isinf(p)) {
      r = 0.0;
      for (int j = 0; j < na; ++j) r = std::max(r, line[j]);
    } else if (p == 1.0) {
      double s = 0.0;
      for (int j = 0; j < na; ++j) s += line[j];
      r = w * s;
    } else if (p == 2.0) {
      double s = 0.0;
      for (int j = 0; j < na; ++j) s += line[j] * line[j];
      r = std::sqrt(w * s);
    } else {
      double s = 0.0;
      for (int j = 0; j < na; ++j) s += std::pow(line[j], p);
      r = std::pow(w * s, 1.0 / p);
    }
    vals[i] = r;
  }
}

double iterated_norm(std::vector<double> vals, const Grid& g, const MixedExponent& p,
                     bool frequency_weights) {
  if (p.size() != g.dim())
    throw ExponentError("exponent tuple length must equal the grid dimension");
  std::size_t lines = g.size();
  for (int a = 0; a < g.dim(); ++a) {
    const int na = g.points(a);
    lines /= static_cast<std::size_t>(na);
    const double w = frequency_weights ? g.freq_step(a) : g.spacing(a);
    reduce_axis(vals, lines, na, p[a], w);
  }
  return vals[0];
}

}  // namespace

double mixed_norm(const RealField& f, const MixedExponent& p) {
  Eigen::ArrayXd mag = f.pointwise_magnitude();
  return iterated_norm({mag.data(), mag.data() + mag.size()}, f.grid(), p, false);
}

double mixed_norm(const SpectralField& F, const MixedExponent& p) {
  Eigen::ArrayXd mag;
  if (F.components() == 1) {
    mag = F.component(0).abs();
  } else {
    mag = F.component(0).abs2();
    for (int c = 1; c < F.components(); ++c) mag += F.component(c).abs2();
    mag = mag.sqrt();
  }
  return iterated_norm({mag.data(), mag.data() + mag.size()}, F.grid(), p, true);
}

MixedExponent conjugate_exponent(const MixedExponent& p) {
  std::vector<double> out(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    if (std::isinf(p[i]))
      out[i] = 1.0;
    else if (p[i] == 1.0)
      out[i] = MixedExponent::inf;
    else
      out[i] = p[i] / (p[i] - 1.0);
  }
  return MixedExponent(std::move(out));
}

RealField circular_convolve(const RealField& phi, const RealField& g) {
  require_same_grid(phi, g);
  if (phi.components() != 1 || g.components() != 1)
    throw ShapeError("convolution expects scalar fields");
  SpectralField P = dft(phi);
  SpectralField G = dft(g);
  P.data() *= G.data();
  P.data() *= std::pow(2.0 * std::numbers::pi, 0.5 * g.grid().dim());
  return idft(P);
}

CheckReport holder_product_check(const RealField& f, const RealField& g,
                                 const MixedExponent& p1, const MixedExponent& p2) {
  require_same_grid(f, g);
  if (p1.size() != p2.size()) throw ExponentError("exponent tuples differ in length");
  std::vector<double> p3(static_cast<std::size_t>(p1.size()));
  for (int i = 0; i < p1.size(); ++i) {
    const double r1 = std::isinf(p1[i]) ? 0.0 : 1.0 / p1[i];
    const double r2 = std::isinf(p2[i]) ? 0.0 : 1.0 / p2[i];
    const double r = r1 + r2;
    if (r > 1.0 + 1e-15) throw ExponentError("reciprocal sum exceeds 1");
    p3[i] = r == 0.0 ? MixedExponent::inf : 1.0 / r;
  }
  const double lhs = mixed_norm(f * g, MixedExponent(p3));
  const double rhs = mixed_norm(f, p1) * mixed_norm(g, p2);
  return CheckReport::bound("holder_product", lhs, rhs, 1e-12);
}

CheckReport young_convolution_check(const RealField& phi, const RealField& g,
                                    const MixedExponent& p) {
  require_same_grid(phi, g);
  const double lhs = mixed_norm(circular_convolve(phi, g), p);
  const double rhs =
      mixed_norm(phi, MixedExponent::uniform(phi.grid().dim(), 1.0)) * mixed_norm(g, p);
  return CheckReport::bound("young_convolution", lhs, rhs, 1e-12);
}

CheckReport hausdorff_young_check(const RealField& f, const MixedExponent& p) {
  if (p.size() != f.grid().dim()) throw ExponentError("exponent length mismatch");
  for (int i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 1.0 && p[i] <= 2.0))
      throw ExponentError("Hausdorff-Young needs exponents in [1, 2]");
    if (i + 1 < p.size() && p[i] < p[i + 1])
      throw ExponentError("Hausdorff-Young needs 1 <= p_d <= ... <= p_1 <= 2");
  }
  const double lhs = mixed_norm(dft(f), conjugate_exponent(p));
  const double rhs = mixed_norm(f, p);
  return CheckReport::bound("hausdorff_young", lhs, rhs, 1e-9);
}

}  // namespace lpns

#include "lpns/fft.hpp"

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <unordered_map>
#include <vector>

namespace lpns {

namespace {

using cd = std::complex<double>;

struct FftTables {
  std::vector<int> bitrev;
  std::vector<cd> twiddle;  // exp(-2*pi*i*k/n), k < n/2
};

// Tables are immutable after construction; the registry lock is only taken on
// the first transform of each length.
const FftTables& tables_for(int n) {
  static std::mutex mu;
  static std::unordered_map<int, std::unique_ptr<FftTables>> registry;
  std::scoped_lock lock(mu);
  auto& slot = registry[n];
  if (!slot) {
    auto t = std::make_unique<FftTables>();
    t->bitrev.resize(n);
    int log2n = 0;
    while ((1 << log2n) < n) ++log2n;
    for (int i = 0; i < n; ++i) {
      int r = 0;
      for (int b = 0; b < log2n; ++b)
        if (i & (1 << b)) r |= 1 << (log2n - 1 - b);
      t->bitrev[i] = r;
    }
    t->twiddle.resize(n / 2);
    for (int k = 0; k < n / 2; ++k) {
      const double ang = -2.0 * std::numbers::pi * k / n;
      t->twiddle[k] = cd(std::cos(ang), std::sin(ang));
    }
    slot = std::move(t);
  }
  return *slot;
}

void fft_line(cd* x, int n, int sign, const FftTables& t) {
  for (int i = 0; i < n; ++i) {
    const int r = t.bitrev[i];
    if (r > i) std::swap(x[i], x[r]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const int half = len >> 1;
    const int step = n / len;
    for (int base = 0; base < n; base += len) {
      for (int j = 0; j < half; ++j) {
        cd w = t.twiddle[j * step];
        if (sign > 0) w = std::conj(w);
        const cd u = x[base + j];
        const cd v = x[base + j + half] * w;
        x[base + j] = u + v;
        x[base + j + half] = u - v;
      }
    }
  }
}

}  // namespace

namespace detail {

void transform_axis(Eigen::ArrayXcd& data, const Grid& g, int components, int axis, int sign) {
  const int n = g.points(axis);
  const std::size_t stride = g.stride(axis);
  const std::size_t total = g.size();
  const FftTables& t = tables_for(n);
  thread_local std::vector<cd> line;
  line.resize(n);

  for (int c = 0; c < components; ++c) {
    cd* base = data.data() + static_cast<std::size_t>(c) * total;
    // Enumerate line origins: indices whose coordinate along `axis` is zero.
    const std::size_t block = stride * static_cast<std::size_t>(n);
    for (std::size_t outer = 0; outer < total; outer += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        cd* p = base + outer + inner;
        if (stride == 1) {
          fft_line(p, n, sign, t);
        } else {
          for (int j = 0; j < n; ++j) line[j] = p[j * stride];
          fft_line(line.data(), n, sign, t);
          for (int j = 0; j < n; ++j) p[j * stride] = line[j];
        }
      }
    }
  }
}

}  // namespace detail

SpectralField dft(const RealField& f) {
  if (!f.all_finite()) throw InvalidFieldError("field has non-finite samples");
  const Grid& g = f.grid();
  SpectralField out(g, f.components());
  out.data().real() = f.data();
  for (int a = 0; a < g.dim(); ++a)
    detail::transform_axis(out.data(), g, f.components(), a, -1);
  const double scale =
      std::pow(2.0 * std::numbers::pi, -0.5 * g.dim()) * g.cell_volume();
  out.data() *= scale;

  // The transform of real samples is conjugate symmetric; remove the rounding
  // noise so downstream multiplier algebra preserves the symmetry bitwise.
  const std::size_t n = g.size();
  for (int c = 0; c < f.components(); ++c) {
    auto comp = out.component(c);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t m = g.mirror_index(i);
      if (m < i) continue;
      if (m == i) {
        comp[static_cast<Eigen::Index>(i)] = comp[static_cast<Eigen::Index>(i)].real();
        continue;
      }
      const cd avg = 0.5 * (comp[static_cast<Eigen::Index>(i)] +
                            std::conj(comp[static_cast<Eigen::Index>(m)]));
      comp[static_cast<Eigen::Index>(i)] = avg;
      comp[static_cast<Eigen::Index>(m)] = std::conj(avg);
    }
  }
  return out;
}

RealField idft(const SpectralField& F) {
  const Grid& g = F.grid();
  const double maxabs = F.data().abs().maxCoeff();
  if (maxabs > 0.0) {
    const double tol = 1e-10 * maxabs;
    const std::size_t n = g.size();
    for (int c = 0; c < F.components(); ++c) {
      auto comp = F.component(c);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t m = g.mirror_index(i);
        if (m < i) continue;
        if (std::abs(comp[static_cast<Eigen::Index>(m)] -
                     std::conj(comp[static_cast<Eigen::Index>(i)])) > tol)
          throw AsymmetryError("spectral coefficients are not conjugate symmetric");
      }
    }
  }

  Eigen::ArrayXcd work = F.data();
  for (int a = 0; a < g.dim(); ++a)
    detail::transform_axis(work, g, F.components(), a, +1);
  double volume = 1.0;
  for (int a = 0; a < g.dim(); ++a) volume *= g.period(a);
  work *= std::pow(2.0 * std::numbers::pi, 0.5 * g.dim()) / volume;

  RealField out(g, F.components());
  out.data() = work.real();
  const double mag = out.data().abs().maxCoeff();
  const double imag = work.imag().abs().maxCoeff();
  if (imag > 1e-12 * std::max(mag, 1e-300))
    throw AsymmetryError("inverse transform has a non-negligible imaginary part");
  return out;
}

RealField derivative(const RealField& f, int axis, int order) {
  const Grid& g = f.grid();
  if (axis < 0 || axis >= g.dim()) throw IndexError("derivative axis out of range");
  if (order < 0) throw IndexError("derivative order must be nonnegative");
  if (order == 0) return f;

  SpectralField F = dft(f);
  const std::size_t n = g.size();
  for (int c = 0; c < f.components(); ++c) {
    auto comp = F.component(c);
    for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& eta, bool nyq) {
      if (nyq) {
        comp[static_cast<Eigen::Index>(i)] = 0.0;
        return;
      }
      cd m(1.0, 0.0);
      const cd ie(0.0, eta[axis]);
      for (int k = 0; k < order; ++k) m *= ie;
      comp[static_cast<Eigen::Index>(i)] *= m;
    });
  }
  (void)n;
  return idft(F);
}

SpectralField divergence_spectrum(const SpectralField& u) {
  const Grid& g = u.grid();
  if (u.components() != g.dim()) throw ShapeError("divergence expects d components");
  SpectralField out(g, 1);
  auto dst = out.component(0);
  for (int c = 0; c < g.dim(); ++c) {
    auto comp = u.component(c);
    for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& eta, bool nyq) {
      if (nyq) return;
      dst[static_cast<Eigen::Index>(i)] +=
          cd(0.0, eta[c]) * comp[static_cast<Eigen::Index>(i)];
    });
  }
  return out;
}

RealField divergence(const RealField& u) {
  return idft(divergence_spectrum(dft(u)));
}

}  // namespace lpns

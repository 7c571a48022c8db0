#include "lpns/corpus.hpp"

#include <cmath>

#include "lpns/fft.hpp"
#include "lpns/stokes.hpp"

namespace lpns {

SpectralField random_band_spectrum(Rng& rng, const FieldSpec& spec) {
  const Grid& g = spec.grid;
  if (!(spec.eta_lo >= 0.0) || !(spec.eta_hi > spec.eta_lo))
    throw BandError("empty spectral envelope");
  if (spec.eta_hi > g.max_frequency() * (1.0 + 1e-12))
    throw BandError("spectral envelope outside the resolved band");
  if (spec.divergence_free && spec.components != g.dim())
    throw ShapeError("divergence-free fields need d components");

  SpectralField F(g, spec.components);
  for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& eta, bool nyq) {
    if (nyq) return;
    double r2 = 0.0;
    for (int a = 0; a < g.dim(); ++a) r2 += eta[a] * eta[a];
    const double r = std::sqrt(r2);
    if (r < spec.eta_lo || r > spec.eta_hi) return;
    const std::size_t mirror = g.mirror_index(i);
    if (mirror < i) return;  // each conjugate pair is drawn once
    const double amp = std::exp(-spec.decay * (r - spec.eta_lo));
    for (int c = 0; c < spec.components; ++c) {
      if (mirror == i) {
        F(c, i) = amp * rng.symmetric();  // self-conjugate mode must stay real
        continue;
      }
      const std::complex<double> z(amp * rng.symmetric(), amp * rng.symmetric());
      F(c, i) = z;
      F(c, mirror) = std::conj(z);
    }
  });

  if (spec.divergence_free) return leray_spectrum(F);
  return F;
}

RealField random_band_field(Rng& rng, const FieldSpec& spec) {
  return idft(random_band_spectrum(rng, spec));
}

std::vector<RealField> generate_corpus(std::uint64_t seed, const FieldSpec& spec, int count) {
  Rng rng(seed);
  std::vector<RealField> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_band_field(rng, spec));
  return out;
}

SpectralField with_grid(const SpectralField& F, const Grid& grid) {
  if (grid.dim() != F.grid().dim() || grid.size() != F.grid().size())
    throw ShapeError("grid reinterpretation needs matching point counts");
  SpectralField out(grid, F.components());
  out.data() = F.data();
  return out;
}

}  // namespace lpns

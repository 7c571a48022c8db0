#pragma once

#include <cstdint>
#include <random>

#include "lpns/field.hpp"

namespace lpns {

/// Deterministic generator: integer-state mt19937_64 with an explicit mantissa
/// conversion, so the produced fields are bit-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

 private:
  std::mt19937_64 gen_;
};

/// Spectral envelope for generated fields: independent coefficients on the
/// lattice annulus eta_lo <= |eta| <= eta_hi, amplitude exp(-decay (|eta| -
/// eta_lo)), conjugate symmetry imposed, Nyquist and zero modes left empty.
struct FieldSpec {
  Grid grid;
  int components = 1;
  double eta_lo = 0.0;
  double eta_hi = 0.0;
  bool divergence_free = false;
  double decay = 0.0;
};

RealField random_band_field(Rng& rng, const FieldSpec& spec);
SpectralField random_band_spectrum(Rng& rng, const FieldSpec& spec);

std::vector<RealField> generate_corpus(std::uint64_t seed, const FieldSpec& spec, int count);

/// Reinterprets the coefficient array on a re-dilated grid (same point counts,
/// different period). Lattice index k keeps its coefficient while its
/// frequency becomes 2 pi k / L'; this realizes u -> u(lambda x) exactly.
SpectralField with_grid(const SpectralField& F, const Grid& grid);

}  // namespace lpns

#pragma once

#include <cstdint>

#include "lpns/corpus.hpp"
#include "lpns/trajectory.hpp"

namespace lpns {

struct SemigroupParams {
  double nu = 1.0;
  /// Per-block decay rate constant, the squared inner annulus radius (3/4)^2.
  static constexpr double block_decay = 9.0 / 16.0;
};

/// Heat semigroup: multiplication by exp(-nu t |eta|^2) in frequency.
RealField heat(const SemigroupParams& params, const RealField& f, double t);
SpectralField heat_spectrum(const SemigroupParams& params, const SpectralField& F, double t);

/// Riesz transform along one axis: multiplier i eta_j / |eta|, zero at the
/// origin (the mean is dropped) and on the Nyquist ring.
RealField riesz(const RealField& f, int axis);

/// Leray projector onto divergence-free fields: delta_ij - eta_i eta_j/|eta|^2.
/// The zero mode passes through unchanged.
RealField leray(const RealField& u);
SpectralField leray_spectrum(const SpectralField& U);

/// (u . grad) u, derivatives taken spectrally, products pointwise.
RealField advection(const RealField& u);

/// Mean-zero pressure solving grad P = -(I - Leray)[(u.grad)u].
RealField pressure_from_velocity(const RealField& u, const SemigroupParams& params);

/// Duhamel integral A(g)(t) = int_0^t exp(nu (t-t') Laplacian) P g(t') dt',
/// evaluated per spectral mode with a piecewise-linear integrand and the
/// exponential kernel integrated exactly on each substep.
Trajectory aux_duhamel(const SemigroupParams& params, const Trajectory& g);
RealField aux_A(const SemigroupParams& params, const Trajectory& g, double t_eval);

/// Spectral trajectories of B(v, w) = A(div(v tensor w)); the physical wrapper
/// materializes every sample.
std::vector<SpectralField> bilinear_spectra(const SemigroupParams& params,
                                            const Trajectory& v, const Trajectory& w);
Trajectory bilinear_trajectory(const SemigroupParams& params, const Trajectory& v,
                               const Trajectory& w);
RealField bilinear_B(const SemigroupParams& params, const Trajectory& v,
                     const Trajectory& w, double t_eval);

/// Exponential-trapezoid weights for one substep of length h at decay rate a:
/// contribution w0 * g_left + w1 * g_right after decaying the running integral
/// by exp(-a h). Exposed for the quadrature unit tests.
struct DuhamelWeights {
  double decay;
  double w_left;
  double w_right;
};
DuhamelWeights duhamel_weights(double a, double h);

/// Corpus of heat trajectories (plus a few normalized second-generation
/// bilinear outputs) over which the bilinear operator norm is measured.
struct BilinearCorpusSpec {
  explicit BilinearCorpusSpec(FieldSpec f) : field(std::move(f)) {}

  FieldSpec field;
  std::uint64_t seed = 1;
  int count = 4;
  double T = 1.0;
  int n_t = 33;
  int enriched = 2;
};

struct BilinearEstimate {
  double k_hat = 0.0;
  double nu = 1.0;
  std::uint64_t seed = 0;
  int corpus_size = 0;
  int pairs = 0;
};

/// max over corpus pairs of ||B(v,w)||_Z / (||v||_Z ||w||_Z) at the critical
/// index. Deterministic for a fixed seed.
BilinearEstimate estimate_bilinear_constant(const SemigroupParams& params,
                                            const BilinearCorpusSpec& spec,
                                            const BesovIndex& idx, const FilterBank& bank);

Trajectory heat_flow(const SemigroupParams& params, const RealField& u0, double T, int n_t);

}  // namespace lpns

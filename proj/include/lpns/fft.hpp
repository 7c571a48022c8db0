#pragma once

#include "lpns/field.hpp"

namespace lpns {

/// Discrete Fourier transform, normalized like the unitary continuum transform:
/// coefficients carry the factor (2*pi)^(-d/2) * prod(L_i/n_i), so the discrete
/// Parseval identity holds exactly between the physical quadrature (weights
/// L_i/n_i) and the frequency quadrature (weights 2*pi/L_i).
SpectralField dft(const RealField& f);

/// Inverse transform. Requires conjugate-symmetric coefficients (checked to
/// 1e-10 relative); the rounding-level imaginary residue is checked against
/// 1e-12 of the field magnitude, then discarded.
RealField idft(const SpectralField& F);

/// Spectral derivative of order k along one axis: multiplication by
/// (i*eta_axis)^k with the Nyquist ring zeroed. k = 0 returns f unchanged.
RealField derivative(const RealField& f, int axis, int order);

/// sum_i d_i u_i for a d-component field, computed spectrally.
RealField divergence(const RealField& u);
SpectralField divergence_spectrum(const SpectralField& u);

namespace detail {
/// In-place power-of-two FFT over one axis of component-major data.
/// sign = -1 forward, +1 inverse (no normalization applied).
void transform_axis(Eigen::ArrayXcd& data, const Grid& g, int components, int axis, int sign);
}  // namespace detail

}  // namespace lpns

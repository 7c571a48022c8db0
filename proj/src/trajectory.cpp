#include "lpns/trajectory.hpp"

#include <cmath>

#include "lpns/fft.hpp"

namespace lpns {

Trajectory::Trajectory(double dt, std::vector<RealField> states, double nu)
    : dt_(dt), nu_(nu), states_(std::move(states)) {
  if (states_.empty()) throw EmptyError("trajectory has no samples");
  if (!(dt_ > 0.0) && states_.size() > 1)
    throw TimeGridError("time step must be positive");
  if (!(nu_ > 0.0)) throw TimeGridError("viscosity must be positive");
  for (const auto& s : states_)
    if (s.grid() != states_.front().grid() ||
        s.components() != states_.front().components())
      throw ShapeError("trajectory states disagree on grid or components");
}

namespace {

double time_reduce(const std::vector<double>& samples, double a, double dt) {
  if (std::isinf(a)) {
    double m = 0.0;
    for (double v : samples) m = std::max(m, v);
    return m;
  }
  // a = 1: trapezoidal rule on the uniform grid.
  if (samples.size() == 1) return 0.0;
  double s = 0.5 * (samples.front() + samples.back());
  for (std::size_t j = 1; j + 1 < samples.size(); ++j) s += samples[j];
  return s * dt;
}

double sequence_norm(const std::vector<double>& x, double q) {
  if (std::isinf(q)) {
    double m = 0.0;
    for (double v : x) m = std::max(m, v);
    return m;
  }
  double s = 0.0;
  for (double v : x) s += std::pow(v, q);
  return std::pow(s, 1.0 / q);
}

template <class SpectrumAt>
double timespace_impl(int n_samples, double dt, const BesovIndex& idx, double a,
                      const FilterBank& bank, SpectrumAt&& spectrum_at) {
  if (n_samples == 0) throw EmptyError("empty trajectory");
  if (!(a == 1.0 || std::isinf(a)))
    throw TimeGridError("time exponent must be 1 or inf");

  const int bands = bank.bands();
  std::vector<std::vector<double>> per_block(
      static_cast<std::size_t>(bands), std::vector<double>(static_cast<std::size_t>(n_samples)));
  for (int j = 0; j < n_samples; ++j) {
    const SpectralField& G = spectrum_at(j);
    for (int l = bank.l_min(); l <= bank.l_max(); ++l)
      per_block[static_cast<std::size_t>(l - bank.l_min())][static_cast<std::size_t>(j)] =
          block_norm(bank, G, l, idx.p, idx.flavor);
  }

  std::vector<double> terms(static_cast<std::size_t>(bands));
  for (int l = bank.l_min(); l <= bank.l_max(); ++l)
    terms[static_cast<std::size_t>(l - bank.l_min())] =
        std::exp2(l * idx.sigma) *
        time_reduce(per_block[static_cast<std::size_t>(l - bank.l_min())], a, dt);
  return sequence_norm(terms, idx.q);
}

}  // namespace

double timespace_norm(const Trajectory& traj, const BesovIndex& idx, double a,
                      const FilterBank& bank) {
  SpectralField scratch(traj.grid(), traj.components());
  return timespace_impl(traj.size(), traj.dt(), idx, a, bank,
                        [&](int j) -> const SpectralField& {
                          scratch = dft(traj.state(j));
                          return scratch;
                        });
}

double timespace_norm(const std::vector<SpectralField>& spectra, double dt,
                      const BesovIndex& idx, double a, const FilterBank& bank) {
  return timespace_impl(static_cast<int>(spectra.size()), dt, idx, a, bank,
                        [&](int j) -> const SpectralField& {
                          return spectra[static_cast<std::size_t>(j)];
                        });
}

ZNormParts z_norm(const Trajectory& traj, const BesovIndex& idx, const FilterBank& bank) {
  ZNormParts out;
  out.linf_part = timespace_norm(traj, idx, MixedExponent::inf, bank);
  out.l1_part = timespace_norm(traj, idx.shifted(2.0), 1.0, bank);
  out.total = std::max(out.linf_part, out.l1_part);
  return out;
}

ZNormParts z_norm(const std::vector<SpectralField>& spectra, double dt,
                  const BesovIndex& idx, const FilterBank& bank) {
  ZNormParts out;
  out.linf_part = timespace_norm(spectra, dt, idx, MixedExponent::inf, bank);
  out.l1_part = timespace_norm(spectra, dt, idx.shifted(2.0), 1.0, bank);
  out.total = std::max(out.linf_part, out.l1_part);
  return out;
}

}  // namespace lpns

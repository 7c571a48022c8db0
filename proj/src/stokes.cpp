#include "lpns/stokes.hpp"

#include <cmath>

#include "lpns/fft.hpp"

namespace lpns {

namespace {

using cd = std::complex<double>;

Eigen::ArrayXd squared_frequency(const Grid& g) {
  Eigen::ArrayXd out(static_cast<Eigen::Index>(g.size()));
  for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& eta, bool) {
    double r2 = 0.0;
    for (int a = 0; a < g.dim(); ++a) r2 += eta[a] * eta[a];
    out[static_cast<Eigen::Index>(i)] = r2;
  });
  return out;
}

Eigen::ArrayXd nyquist_mask(const Grid& g) {
  Eigen::ArrayXd out(static_cast<Eigen::Index>(g.size()));
  for_each_mode(g, [&](std::size_t i, const std::array<double, 3>&, bool nyq) {
    out[static_cast<Eigen::Index>(i)] = nyq ? 0.0 : 1.0;
  });
  return out;
}

}  // namespace

SpectralField heat_spectrum(const SemigroupParams& params, const SpectralField& F, double t) {
  if (t < 0.0) throw std::domain_error("heat semigroup needs t >= 0");
  const Grid& g = F.grid();
  const Eigen::ArrayXd mult =
      (-params.nu * t * squared_frequency(g)).exp() * nyquist_mask(g);
  SpectralField out = F;
  for (int c = 0; c < out.components(); ++c) out.component(c) *= mult;
  return out;
}

RealField heat(const SemigroupParams& params, const RealField& f, double t) {
  return idft(heat_spectrum(params, dft(f), t));
}

RealField riesz(const RealField& f, int axis) {
  const Grid& g = f.grid();
  if (f.components() != 1) throw ShapeError("riesz transform acts on scalar fields");
  if (axis < 0 || axis >= g.dim()) throw IndexError("riesz axis out of range");
  SpectralField F = dft(f);
  auto comp = F.component(0);
  for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& eta, bool nyq) {
    double r2 = 0.0;
    for (int a = 0; a < g.dim(); ++a) r2 += eta[a] * eta[a];
    if (nyq || r2 == 0.0) {
      comp[static_cast<Eigen::Index>(i)] = 0.0;
      return;
    }
    comp[static_cast<Eigen::Index>(i)] *= cd(0.0, eta[axis] / std::sqrt(r2));
  });
  return idft(F);
}

SpectralField leray_spectrum(const SpectralField& U) {
  const Grid& g = U.grid();
  const int d = g.dim();
  if (U.components() != d) throw ShapeError("leray projector needs d components");
  SpectralField out = U;
  for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& eta, bool nyq) {
    const Eigen::Index k = static_cast<Eigen::Index>(i);
    if (nyq) {
      for (int c = 0; c < d; ++c) out.component(c)[k] = 0.0;
      return;
    }
    double r2 = 0.0;
    for (int a = 0; a < d; ++a) r2 += eta[a] * eta[a];
    if (r2 == 0.0) return;  // mean velocity has no gradient part
    cd dot(0.0, 0.0);
    for (int c = 0; c < d; ++c) dot += eta[c] * out.component(c)[k];
    dot /= r2;
    for (int c = 0; c < d; ++c) out.component(c)[k] -= eta[c] * dot;
  });
  return out;
}

RealField leray(const RealField& u) { return idft(leray_spectrum(dft(u))); }

RealField advection(const RealField& u) {
  const Grid& g = u.grid();
  const int d = g.dim();
  if (u.components() != d) throw ShapeError("advection needs d components");
  const SpectralField U = dft(u);
  RealField out(g, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      SpectralField dju(g, 1);
      auto dst = dju.component(0);
      auto src = U.component(i);
      for_each_mode(g, [&](std::size_t m, const std::array<double, 3>& eta, bool nyq) {
        const Eigen::Index k = static_cast<Eigen::Index>(m);
        dst[k] = nyq ? cd(0.0, 0.0) : cd(0.0, eta[j]) * src[k];
      });
      out.component(i) += u.component(j) * idft(dju).component(0);
    }
  }
  return out;
}

RealField pressure_from_velocity(const RealField& u, const SemigroupParams&) {
  const Grid& g = u.grid();
  const double div_rel = l2_norm(divergence(u));
  const double scale = l2_norm(u);
  if (div_rel > 1e-8 * std::max(scale, 1e-300))
    throw ConsistencyError("pressure recovery needs a divergence-free velocity");

  const SpectralField G = dft(advection(u));
  SpectralField P(g, 1);
  auto dst = P.component(0);
  for_each_mode(g, [&](std::size_t m, const std::array<double, 3>& eta, bool nyq) {
    const Eigen::Index k = static_cast<Eigen::Index>(m);
    double r2 = 0.0;
    for (int a = 0; a < g.dim(); ++a) r2 += eta[a] * eta[a];
    if (nyq || r2 == 0.0) {
      dst[k] = 0.0;
      return;
    }
    cd dot(0.0, 0.0);
    for (int c = 0; c < g.dim(); ++c) dot += eta[c] * G.component(c)[k];
    dst[k] = cd(0.0, 1.0) * dot / r2;
  });
  return idft(P);
}

DuhamelWeights duhamel_weights(double a, double h) {
  const double z = a * h;
  double e1, e2;
  if (z < 1e-12) {
    e1 = 1.0 - 0.5 * z;
    e2 = 0.5 - z / 3.0;
  } else {
    e1 = -std::expm1(-z) / z;
    if (z < 0.5) {
      // sum_{m>=0} (-1)^m (m+1) z^m / (m+2)!
      double term = 0.5, sum = 0.5;
      for (int m = 1; m < 30; ++m) {
        term *= -z * (m + 1) / (static_cast<double>(m) * (m + 2));
        sum += term;
        if (std::abs(term) < 1e-20 * std::abs(sum)) break;
      }
      e2 = sum;
    } else {
      e2 = (1.0 - (1.0 + z) * std::exp(-z)) / (z * z);
    }
  }
  return {std::exp(-z), h * e2, h * (e1 - e2)};
}

namespace {

struct DuhamelKernel {
  Eigen::ArrayXd decay, w_left, w_right;
};

DuhamelKernel build_kernel(const Grid& g, double nu, double h) {
  const Eigen::ArrayXd r2 = squared_frequency(g);
  DuhamelKernel k;
  const Eigen::Index n = r2.size();
  k.decay.resize(n);
  k.w_left.resize(n);
  k.w_right.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const DuhamelWeights w = duhamel_weights(nu * r2[i], h);
    k.decay[i] = w.decay;
    k.w_left[i] = w.w_left;
    k.w_right[i] = w.w_right;
  }
  return k;
}

int sample_index(const Trajectory& traj, double t_eval) {
  const double pos = traj.dt() > 0.0 ? t_eval / traj.dt() : 0.0;
  const int j = static_cast<int>(std::lround(pos));
  if (j < 0 || j >= traj.size() || std::abs(pos - j) > 1e-9)
    throw TimeGridError("evaluation time is not on the trajectory grid");
  return j;
}

void accumulate_step(SpectralField& acc, const SpectralField& g_prev,
                     const SpectralField& g_next, const DuhamelKernel& k) {
  for (int c = 0; c < acc.components(); ++c)
    acc.component(c) = acc.component(c) * k.decay + g_prev.component(c) * k.w_left +
                       g_next.component(c) * k.w_right;
}

}  // namespace

Trajectory aux_duhamel(const SemigroupParams& params, const Trajectory& g) {
  const Grid& grid = g.grid();
  if (g.components() != grid.dim()) throw ShapeError("duhamel operator needs d components");
  const DuhamelKernel kernel = build_kernel(grid, params.nu, g.dt());

  std::vector<RealField> states;
  states.reserve(static_cast<std::size_t>(g.size()));
  SpectralField acc(grid, grid.dim());
  SpectralField prev = leray_spectrum(dft(g.state(0)));
  states.push_back(idft(acc));
  for (int j = 1; j < g.size(); ++j) {
    SpectralField next = leray_spectrum(dft(g.state(j)));
    accumulate_step(acc, prev, next, kernel);
    states.push_back(idft(acc));
    prev = std::move(next);
  }
  return Trajectory(g.dt(), std::move(states), params.nu);
}

RealField aux_A(const SemigroupParams& params, const Trajectory& g, double t_eval) {
  const int j_eval = sample_index(g, t_eval);
  const Grid& grid = g.grid();
  if (g.components() != grid.dim()) throw ShapeError("duhamel operator needs d components");
  const DuhamelKernel kernel = build_kernel(grid, params.nu, g.dt());
  SpectralField acc(grid, grid.dim());
  if (j_eval == 0) return idft(acc);
  SpectralField prev = leray_spectrum(dft(g.state(0)));
  for (int j = 1; j <= j_eval; ++j) {
    SpectralField next = leray_spectrum(dft(g.state(j)));
    accumulate_step(acc, prev, next, kernel);
    prev = std::move(next);
  }
  return idft(acc);
}

namespace {

// Leray-projected spectral divergence of v tensor w at one sample.
SpectralField projected_tensor_divergence(const RealField& v, const RealField& w) {
  const Grid& g = v.grid();
  const int d = g.dim();
  SpectralField div(g, d);
  for (int i = 0; i < d; ++i) {
    SpectralField row(g, d);
    for (int j = 0; j < d; ++j) {
      RealField prod(g, 1);
      prod.component(0) = v.component(i) * w.component(j);
      row.component(j) = dft(prod).component(0);
    }
    auto dst = div.component(i);
    for_each_mode(g, [&](std::size_t m, const std::array<double, 3>& eta, bool nyq) {
      const Eigen::Index k = static_cast<Eigen::Index>(m);
      if (nyq) {
        dst[k] = 0.0;
        return;
      }
      cd s(0.0, 0.0);
      for (int j = 0; j < d; ++j) s += cd(0.0, eta[j]) * row.component(j)[k];
      dst[k] = s;
    });
  }
  return leray_spectrum(div);
}

void require_compatible(const Trajectory& v, const Trajectory& w) {
  if (v.grid() != w.grid()) throw ShapeError("trajectories live on different grids");
  if (v.size() != w.size() || std::abs(v.dt() - w.dt()) > 1e-15 * std::max(v.dt(), 1.0))
    throw TimeGridError("trajectories disagree on the time grid");
  if (v.components() != v.grid().dim() || w.components() != w.grid().dim())
    throw ShapeError("bilinear term needs d-component trajectories");
}

}  // namespace

std::vector<SpectralField> bilinear_spectra(const SemigroupParams& params,
                                            const Trajectory& v, const Trajectory& w) {
  require_compatible(v, w);
  const Grid& grid = v.grid();
  const DuhamelKernel kernel = build_kernel(grid, params.nu, v.dt());

  std::vector<SpectralField> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  SpectralField acc(grid, grid.dim());
  out.push_back(acc);
  SpectralField prev = projected_tensor_divergence(v.state(0), w.state(0));
  for (int j = 1; j < v.size(); ++j) {
    SpectralField next = projected_tensor_divergence(v.state(j), w.state(j));
    accumulate_step(acc, prev, next, kernel);
    out.push_back(acc);
    prev = std::move(next);
  }
  return out;
}

Trajectory bilinear_trajectory(const SemigroupParams& params, const Trajectory& v,
                               const Trajectory& w) {
  std::vector<SpectralField> spectra = bilinear_spectra(params, v, w);
  std::vector<RealField> states;
  states.reserve(spectra.size());
  for (const auto& s : spectra) states.push_back(idft(s));
  return Trajectory(v.dt(), std::move(states), params.nu);
}

RealField bilinear_B(const SemigroupParams& params, const Trajectory& v,
                     const Trajectory& w, double t_eval) {
  const int j_eval = sample_index(v, t_eval);
  require_compatible(v, w);
  const Grid& grid = v.grid();
  const DuhamelKernel kernel = build_kernel(grid, params.nu, v.dt());
  SpectralField acc(grid, grid.dim());
  if (j_eval == 0) return idft(acc);
  SpectralField prev = projected_tensor_divergence(v.state(0), w.state(0));
  for (int j = 1; j <= j_eval; ++j) {
    SpectralField next = projected_tensor_divergence(v.state(j), w.state(j));
    accumulate_step(acc, prev, next, kernel);
    prev = std::move(next);
  }
  return idft(acc);
}

Trajectory heat_flow(const SemigroupParams& params, const RealField& u0, double T, int n_t) {
  if (n_t < 2) throw TimeGridError("heat flow needs at least two samples");
  if (!(T > 0.0)) throw TimeGridError("horizon must be positive");
  const double dt = T / (n_t - 1);
  const SpectralField U0 = dft(u0);
  std::vector<RealField> states;
  states.reserve(static_cast<std::size_t>(n_t));
  for (int j = 0; j < n_t; ++j)
    states.push_back(idft(heat_spectrum(params, U0, j * dt)));
  return Trajectory(dt, std::move(states), params.nu);
}

BilinearEstimate estimate_bilinear_constant(const SemigroupParams& params,
                                            const BilinearCorpusSpec& spec,
                                            const BesovIndex& idx, const FilterBank& bank) {
  const double crit = critical_sigma(idx.p, idx.flavor);
  if (std::abs(idx.sigma - crit) > 1e-9)
    throw CriticalityError("bilinear constant is measured at the critical index");

  Rng rng(spec.seed);
  std::vector<Trajectory> corpus;
  for (int i = 0; i < spec.count; ++i) {
    FieldSpec fs = spec.field;
    fs.divergence_free = true;
    fs.components = spec.field.grid.dim();
    corpus.push_back(heat_flow(params, random_band_field(rng, fs), spec.T, spec.n_t));
  }

  std::vector<double> norms;
  for (const auto& traj : corpus) norms.push_back(z_norm(traj, idx, bank).total);

  BilinearEstimate est;
  est.nu = params.nu;
  est.seed = spec.seed;

  int enriched_left = spec.enriched;
  double k_hat = 0.0;
  int pairs = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      if (norms[i] == 0.0 || norms[j] == 0.0) continue;
      Trajectory b = bilinear_trajectory(params, corpus[i], corpus[j]);
      const double bz = z_norm(b, idx, bank).total;
      k_hat = std::max(k_hat, bz / (norms[i] * norms[j]));
      ++pairs;
      if (enriched_left > 0 && bz > 0.0 && i != j) {
        // Second-generation member: shapes the Picard iterates actually visit.
        for (int m = 0; m < b.size(); ++m) b.state(m) = (1.0 / bz) * b.state(m);
        norms.push_back(z_norm(b, idx, bank).total);
        corpus.push_back(std::move(b));
        --enriched_left;
      }
    }
  }

  if (pairs == 0 || k_hat == 0.0)
    throw CorpusError("degenerate corpus: no nonzero bilinear ratio");
  est.k_hat = k_hat;
  est.corpus_size = static_cast<int>(corpus.size());
  est.pairs = pairs;
  return est;
}

}  // namespace lpns

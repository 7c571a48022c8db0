#include "lpns/solver.hpp"

#include <cmath>

#include "lpns/fft.hpp"

namespace lpns {

void SolverConfig::validate() const {
  if (!(nu > 0.0)) throw ConfigError("viscosity must be positive");
  if (!(T > 0.0)) throw ConfigError("horizon must be positive");
  if (n_t < 2) throw ConfigError("need at least two time samples");
  if (max_iters < 1) throw ConfigError("need at least one iteration");
  if (!(tol_residual > 0.0)) throw ConfigError("residual tolerance must be positive");
  if (k_hat > 0.0 && epsilon > 0.0 && !(epsilon < 1.0 / (4.0 * k_hat)))
    throw ConfigError("smallness budget must stay below 1/(4 K)");
}

namespace {

double support_radius(const SpectralField& F) {
  const Grid& g = F.grid();
  double peak = 0.0;
  for (int c = 0; c < F.components(); ++c)
    peak = std::max(peak, F.component(c).abs().maxCoeff());
  if (peak == 0.0) return 0.0;
  double r_max = 0.0;
  for (int c = 0; c < F.components(); ++c) {
    auto comp = F.component(c);
    for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& eta, bool) {
      if (std::abs(comp[static_cast<Eigen::Index>(i)]) <= 1e-13 * peak) return;
      double r2 = 0.0;
      for (int a = 0; a < g.dim(); ++a) r2 += eta[a] * eta[a];
      r_max = std::max(r_max, std::sqrt(r2));
    });
  }
  return r_max;
}

RealField prepared_initial_data(const RealField& u0, const SolverConfig& cfg,
                                const FilterBank& bank) {
  if (u0.components() != u0.grid().dim())
    throw ShapeError("initial data needs d components");
  const double scale = l2_norm(u0);
  if (scale == 0.0) return u0;

  RealField data = u0;
  const double div_rel = l2_norm(divergence(u0)) / scale;
  if (div_rel > 1e-10) {
    if (!cfg.project)
      throw ConsistencyError("initial data is not divergence-free; pass project");
    data = leray(u0);
  }

  SpectralField F = dft(data);
  double mean = 0.0;
  for (int c = 0; c < F.components(); ++c)
    mean = std::max(mean, std::abs(F.component(c)[0]));
  if (mean > 1e-12 * F.data().abs().maxCoeff())
    throw ConsistencyError("initial data must be mean-free");
  if (support_radius(F) > bank.covered_hi() * (1.0 + 1e-12))
    throw BandError("initial data spectrum escapes the covered band");
  return data;
}

struct SpectralTrajectory {
  double dt = 0.0;
  std::vector<SpectralField> spectra;
};

SpectralTrajectory spectra_of(const Trajectory& traj) {
  SpectralTrajectory out;
  out.dt = traj.dt();
  out.spectra.reserve(static_cast<std::size_t>(traj.size()));
  for (int j = 0; j < traj.size(); ++j) out.spectra.push_back(dft(traj.state(j)));
  return out;
}

double z_distance(const SpectralTrajectory& a, const SpectralTrajectory& b,
                  const BesovIndex& idx, const FilterBank& bank) {
  std::vector<SpectralField> diff;
  diff.reserve(a.spectra.size());
  for (std::size_t j = 0; j < a.spectra.size(); ++j)
    diff.push_back(a.spectra[j] - b.spectra[j]);
  return z_norm(diff, a.dt, idx, bank).total;
}

}  // namespace

Trajectory heat_trajectory(const RealField& u0, const SolverConfig& cfg,
                           const FilterBank& bank) {
  cfg.validate();
  const RealField data = prepared_initial_data(u0, cfg, bank);
  return heat_flow(cfg.semigroup(), data, cfg.T, cfg.n_t);
}

SolveResult picard_solve(const RealField& u0, const SolverConfig& cfg,
                         const FilterBank& bank) {
  cfg.validate();
  const RealField data = prepared_initial_data(u0, cfg, bank);

  if (cfg.smallness_limit > 0.0) {
    const double size = dyadic_norm(data, cfg.idx, bank);
    if (size > cfg.smallness_limit)
      throw SmallnessError("initial data exceeds the smallness budget");
  }

  const SemigroupParams params = cfg.semigroup();
  Trajectory z0 = heat_flow(params, data, cfg.T, cfg.n_t);
  const SpectralTrajectory z0_spec = spectra_of(z0);

  SolverState state;
  state.z0_norm = z_norm(z0_spec.spectra, z0_spec.dt, cfg.idx, bank).total;

  Trajectory current = z0;
  SpectralTrajectory current_spec = z0_spec;
  state.z_norm_history.push_back(state.z0_norm);

  bool converged = false;
  double prev_abs_residual = -1.0;
  double prev_rel_residual = -1.0;
  int rising = 0;

  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    std::vector<SpectralField> next_spec = bilinear_spectra(params, current, current);
    for (std::size_t j = 0; j < next_spec.size(); ++j)
      next_spec[j] = next_spec[j] + z0_spec.spectra[j];

    SpectralTrajectory next{cfg.dt(), std::move(next_spec)};
    const double next_norm = z_norm(next.spectra, next.dt, cfg.idx, bank).total;
    const double abs_residual = z_distance(next, current_spec, cfg.idx, bank);
    const double rel_residual = abs_residual / std::max(next_norm, 1e-300);

    state.iterations = iter;
    state.residual_history.push_back(rel_residual);
    state.z_norm_history.push_back(next_norm);
    if (prev_abs_residual > 0.0 && abs_residual > 1e3 * 2.2e-16 * next_norm)
      state.max_contraction_ratio =
          std::max(state.max_contraction_ratio, abs_residual / prev_abs_residual);
    prev_abs_residual = abs_residual;

    std::vector<RealField> states;
    states.reserve(next.spectra.size());
    for (const auto& s : next.spectra) states.push_back(idft(s));
    current = Trajectory(cfg.dt(), std::move(states), cfg.nu);
    current_spec = std::move(next);

    if (rel_residual <= cfg.tol_residual) {
      converged = true;
      break;
    }
    if (prev_rel_residual >= 0.0 && rel_residual > prev_rel_residual) {
      if (++rising >= 3)
        throw DivergenceError("residual increased three times; smallness violated");
    } else {
      rising = 0;
    }
    prev_rel_residual = rel_residual;
  }

  state.final_norm = state.z_norm_history.back();
  state.norm_bound_ok = state.final_norm <= 2.0 * state.z0_norm * (1.0 + 1e-6);
  return {std::move(current), std::move(state), converged};
}

CheckReport continuity_check(const RealField& u0, const RealField& u0_tilde,
                             const SolverConfig& cfg, const FilterBank& bank) {
  if (!(cfg.k_hat > 0.0)) throw ConfigError("continuity check needs a measured K");
  SolveResult a = picard_solve(u0, cfg, bank);
  SolveResult b = picard_solve(u0_tilde, cfg, bank);

  const SpectralTrajectory sa = spectra_of(a.solution);
  const SpectralTrajectory sb = spectra_of(b.solution);
  const double lhs = z_distance(sa, sb, cfg.idx, bank);

  Trajectory za = heat_trajectory(u0, cfg, bank);
  Trajectory zb = heat_trajectory(u0_tilde, cfg, bank);
  const double dz0 = z_distance(spectra_of(za), spectra_of(zb), cfg.idx, bank);

  const double eps_meas = std::max(a.state.z0_norm, b.state.z0_norm);
  const double damping = 1.0 - 4.0 * cfg.k_hat * eps_meas;
  if (!(damping > 0.0)) throw SmallnessError("4 K epsilon reached 1; no Lipschitz bound");

  CheckReport r = CheckReport::bound("lipschitz_dependence", lhs, dz0 / damping, 1e-3);
  r.note = "eps=" + std::to_string(eps_meas) + " factor=" + std::to_string(1.0 / damping);
  return r;
}

namespace {

// -Leray[i eta . (u tensor u)^] from the physical samples of u.
SpectralField rk4_rhs(const RealField& u) {
  const Grid& g = u.grid();
  const int d = g.dim();
  SpectralField div(g, d);
  for (int i = 0; i < d; ++i) {
    SpectralField row(g, d);
    for (int j = 0; j < d; ++j) {
      RealField prod(g, 1);
      prod.component(0) = u.component(i) * u.component(j);
      row.component(j) = dft(prod).component(0);
    }
    auto dst = div.component(i);
    for_each_mode(g, [&](std::size_t m, const std::array<double, 3>& eta, bool nyq) {
      const Eigen::Index k = static_cast<Eigen::Index>(m);
      if (nyq) {
        dst[k] = 0.0;
        return;
      }
      std::complex<double> s(0.0, 0.0);
      for (int j = 0; j < d; ++j) s += std::complex<double>(0.0, eta[j]) * row.component(j)[k];
      dst[k] = -s;
    });
  }
  return leray_spectrum(div);
}

}  // namespace

Trajectory rk4_oracle(const RealField& u0, const SolverConfig& cfg) {
  cfg.validate();
  const Grid& g = u0.grid();
  if (u0.components() != g.dim()) throw ShapeError("initial data needs d components");

  const double h = cfg.dt() / cfg.oracle_substeps;
  const double u_max = u0.pointwise_magnitude().maxCoeff();
  const double eta_max = g.max_frequency();
  if (u_max > 0.0 && h > 2.8 / (u_max * eta_max))
    throw StepSizeError("time step exceeds the advective stability bound");

  const Eigen::ArrayXd r2 = [&] {
    Eigen::ArrayXd out(static_cast<Eigen::Index>(g.size()));
    for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& eta, bool) {
      double s = 0.0;
      for (int a = 0; a < g.dim(); ++a) s += eta[a] * eta[a];
      out[static_cast<Eigen::Index>(i)] = s;
    });
    return out;
  }();
  const Eigen::ArrayXd e_half = (-0.5 * cfg.nu * h * r2).exp();
  const Eigen::ArrayXd e_full = e_half * e_half;

  auto scale = [&](const SpectralField& f, const Eigen::ArrayXd& m) {
    SpectralField out = f;
    for (int c = 0; c < out.components(); ++c) out.component(c) *= m;
    return out;
  };

  SpectralField u_hat = dft(u0);
  std::vector<RealField> states;
  states.reserve(static_cast<std::size_t>(cfg.n_t));
  states.push_back(u0);

  for (int j = 1; j < cfg.n_t; ++j) {
    for (int s = 0; s < cfg.oracle_substeps; ++s) {
      // Integrating-factor RK4: the viscous multiplier is applied exactly.
      const SpectralField k1 = rk4_rhs(idft(u_hat));
      const SpectralField mid = scale(u_hat, e_half);
      const SpectralField k2 = rk4_rhs(idft(mid + 0.5 * h * scale(k1, e_half)));
      const SpectralField k3 = rk4_rhs(idft(mid + 0.5 * h * k2));
      const SpectralField full = scale(u_hat, e_full);
      const SpectralField k4 = rk4_rhs(idft(full + h * scale(k3, e_half)));

      SpectralField next = full;
      next.data() += (h / 6.0) * (scale(k1, e_full).data() + 2.0 * scale(k2, e_half).data() +
                                  2.0 * scale(k3, e_half).data() + k4.data());
      u_hat = std::move(next);
    }
    states.push_back(idft(u_hat));
  }
  return Trajectory(cfg.dt(), std::move(states), cfg.nu);
}

double trajectory_linf_l2_distance(const Trajectory& a, const Trajectory& b) {
  if (a.size() != b.size()) throw TimeGridError("trajectories disagree on sampling");
  double num = 0.0, den = 0.0;
  for (int j = 0; j < a.size(); ++j) {
    num = std::max(num, l2_norm(a.state(j) - b.state(j)));
    den = std::max(den, l2_norm(a.state(j)));
  }
  return den > 0.0 ? num / den : num;
}

}  // namespace lpns

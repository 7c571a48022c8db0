#include "lpns/filter_bank.hpp"

#include <cmath>

#include "lpns/fft.hpp"

namespace lpns {

double FilterBank::bump(double r) {
  const double mid = 0.5 * (annulus_inner + annulus_outer);
  const double half = 0.5 * (annulus_outer - annulus_inner);
  const double t = (r - mid) / half;
  if (std::abs(t) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - t * t));
}

double FilterBank::profile(double r) {
  if (!(r > 0.0)) return 0.0;
  const double c = bump(r);
  if (c == 0.0) return 0.0;
  // The telescoping sum has at most two live terms since 8/3 < 4 * 3/4 * 2.
  double s = 0.0;
  const int j_lo = static_cast<int>(std::floor(std::log2(r / annulus_outer)));
  for (int j = j_lo; j <= j_lo + 3; ++j) s += bump(std::ldexp(r, -j));
  return c / s;
}

FilterBank FilterBank::build(const Grid& grid) {
  FilterBank bank(grid);
  const std::size_t n = grid.size();

  Eigen::ArrayXd radius(static_cast<Eigen::Index>(n));
  Eigen::Array<bool, Eigen::Dynamic, 1> nyq(static_cast<Eigen::Index>(n));
  for_each_mode(grid, [&](std::size_t i, const std::array<double, 3>& eta, bool ny) {
    double r2 = 0.0;
    for (int a = 0; a < grid.dim(); ++a) r2 += eta[a] * eta[a];
    radius[static_cast<Eigen::Index>(i)] = std::sqrt(r2);
    nyq[static_cast<Eigen::Index>(i)] = ny;
  });

  const double r_min = grid.min_frequency();
  const double r_max = grid.max_frequency();
  const int l_lo = static_cast<int>(std::floor(std::log2(r_min / annulus_outer))) - 1;
  const int l_hi = static_cast<int>(std::ceil(std::log2(r_max / annulus_inner))) + 1;

  std::vector<Eigen::ArrayXd> tables;
  std::vector<int> levels;
  for (int l = l_lo; l <= l_hi; ++l) {
    Eigen::ArrayXd tab = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(n));
    bool live = false;
    for (Eigen::Index i = 0; i < tab.size(); ++i) {
      if (nyq[i]) continue;
      const double v = profile(std::ldexp(radius[i], -l));
      if (v != 0.0) {
        tab[i] = v;
        live = true;
      }
    }
    if (live) {
      tables.push_back(std::move(tab));
      levels.push_back(l);
    }
  }

  if (levels.empty()) throw BandError("no dyadic annulus intersects the lattice");
  bank.l_min_ = levels.front();
  bank.l_max_ = levels.back();
  if (bank.covered_lo() > bank.covered_hi())
    throw BandError("grid too small to contain one fully covered annulus");

  bank.phi_.assign(static_cast<std::size_t>(bank.bands()),
                   Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(n)));
  for (std::size_t k = 0; k < levels.size(); ++k)
    bank.phi_[static_cast<std::size_t>(levels[k] - bank.l_min_)] = std::move(tables[k]);

  bank.zeta_.resize(static_cast<std::size_t>(bank.bands()) + 1);
  bank.zeta_[0] = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(n));
  for (int l = bank.l_min_ + 1; l <= bank.l_max_ + 1; ++l)
    bank.zeta_[static_cast<std::size_t>(l - bank.l_min_)] =
        bank.zeta_[static_cast<std::size_t>(l - 1 - bank.l_min_)] +
        bank.phi_[static_cast<std::size_t>(l - 1 - bank.l_min_)];

  bank.zero_ = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(n));
  return bank;
}

const Eigen::ArrayXd& FilterBank::phi(int l) const {
  if (l < l_min_ || l > l_max_) throw BandError("block index outside resolved band");
  return phi_[static_cast<std::size_t>(l - l_min_)];
}

const Eigen::ArrayXd& FilterBank::zeta(int l) const {
  if (l <= l_min_) return zero_;
  if (l > l_max_ + 1) l = l_max_ + 1;
  return zeta_[static_cast<std::size_t>(l - l_min_)];
}

double FilterBank::covered_lo() const { return annulus_outer * std::ldexp(1.0, l_min_); }
double FilterBank::covered_hi() const { return annulus_inner * std::ldexp(1.0, l_max_); }

namespace {

SpectralField apply_real_multiplier(const SpectralField& G, const Eigen::ArrayXd& m) {
  SpectralField out = G;
  for (int c = 0; c < out.components(); ++c) out.component(c) *= m;
  return out;
}

}  // namespace

SpectralField block_spectrum(const FilterBank& bank, const SpectralField& G, int l) {
  if (G.grid() != bank.grid()) throw ShapeError("field grid does not match the bank");
  return apply_real_multiplier(G, bank.phi(l));
}

RealField block(const FilterBank& bank, const RealField& g, int l) {
  return idft(block_spectrum(bank, dft(g), l));
}

RealField low_pass(const FilterBank& bank, const RealField& g, int l) {
  if (g.grid() != bank.grid()) throw ShapeError("field grid does not match the bank");
  return idft(apply_real_multiplier(dft(g), bank.zeta(l)));
}

std::vector<CheckReport> almost_orthogonality_check(const FilterBank& bank,
                                                    const RealField& f,
                                                    const RealField& g) {
  std::vector<CheckReport> out;
  const double norm_g = l2_norm(g);
  const double norm_f = l2_norm(f);

  std::vector<RealField> blocks_g;
  blocks_g.reserve(static_cast<std::size_t>(bank.bands()));
  for (int l = bank.l_min(); l <= bank.l_max(); ++l)
    blocks_g.push_back(block(bank, g, l));

  for (int lp = bank.l_min(); lp <= bank.l_max(); ++lp) {
    const RealField& bg = blocks_g[static_cast<std::size_t>(lp - bank.l_min())];
    for (int l = bank.l_min(); l <= bank.l_max(); ++l) {
      const int gap = std::abs(l - lp);
      if (gap < 1) continue;
      const double val = l2_norm(block(bank, bg, l));
      if (gap >= 2) {
        out.push_back(CheckReport::bound(
            "block_composition l=" + std::to_string(l) + " l'=" + std::to_string(lp),
            val, 1e-12 * norm_g, 0.0));
      } else if (l < lp) {
        out.push_back(CheckReport::info(
            "block_composition_adjacent l=" + std::to_string(l) + " l'=" + std::to_string(lp),
            val, "overlapping supports, reported only"));
      }
    }
  }

  for (int lp = bank.l_min(); lp <= bank.l_max(); ++lp) {
    const RealField prod =
        low_pass(bank, f, lp - 1) * blocks_g[static_cast<std::size_t>(lp - bank.l_min())];
    for (int l = bank.l_min(); l <= bank.l_max(); ++l) {
      if (std::abs(l - lp) < 5) continue;
      const double val = l2_norm(block(bank, prod, l));
      out.push_back(CheckReport::bound(
          "paraproduct_term l=" + std::to_string(l) + " l'=" + std::to_string(lp),
          val, 1e-10 * norm_f * norm_g, 0.0));
    }
  }
  return out;
}

}  // namespace lpns

#include "lpns/paraproduct.hpp"

#include <cmath>

#include "lpns/fft.hpp"

namespace lpns {

namespace {

void require_scalar_pair(const RealField& v, const RealField& w) {
  require_same_grid(v, w);
  if (v.components() != 1 || w.components() != 1)
    throw ShapeError("paraproduct operates on scalar fields");
}

}  // namespace

RealField paraproduct(const FilterBank& bank, const RealField& v, const RealField& w) {
  require_scalar_pair(v, w);
  const SpectralField V = dft(v);
  const SpectralField W = dft(w);
  RealField acc(v.grid(), 1);
  for (int l = bank.l_min(); l <= bank.l_max(); ++l) {
    SpectralField low = V;
    low.component(0) *= bank.zeta(l - 1);
    acc.data() += (idft(low) * idft(block_spectrum(bank, W, l))).data();
  }
  return acc;
}

RealField remainder_term(const FilterBank& bank, const RealField& v, const RealField& w) {
  require_scalar_pair(v, w);
  const SpectralField V = dft(v);
  const SpectralField W = dft(w);
  std::vector<RealField> wv, ww;
  for (int l = bank.l_min(); l <= bank.l_max(); ++l) {
    wv.push_back(idft(block_spectrum(bank, V, l)));
    ww.push_back(idft(block_spectrum(bank, W, l)));
  }
  RealField acc(v.grid(), 1);
  for (int l = bank.l_min(); l <= bank.l_max(); ++l) {
    RealField near(v.grid(), 1);
    for (int lp = std::max(l - 1, bank.l_min()); lp <= std::min(l + 1, bank.l_max()); ++lp)
      near.data() += ww[static_cast<std::size_t>(lp - bank.l_min())].data();
    acc.data() += (wv[static_cast<std::size_t>(l - bank.l_min())] * near).data();
  }
  return acc;
}

BonyPieces bony_decompose(const FilterBank& bank, const RealField& v, const RealField& w) {
  return {paraproduct(bank, v, w), paraproduct(bank, w, v), remainder_term(bank, v, w)};
}

std::array<int, 3> support_extent(const RealField& f) {
  const Grid& g = f.grid();
  SpectralField F = dft(f);
  double peak = 0.0;
  for (int c = 0; c < F.components(); ++c)
    peak = std::max(peak, F.component(c).abs().maxCoeff());
  std::array<int, 3> extent{0, 0, 0};
  if (peak == 0.0) return extent;
  const double tol = 1e-13 * peak;
  for (int c = 0; c < F.components(); ++c) {
    auto comp = F.component(c);
    std::size_t flat = 0;
    for (int m2 = 0; m2 < (g.dim() > 2 ? g.points(2) : 1); ++m2)
      for (int m1 = 0; m1 < (g.dim() > 1 ? g.points(1) : 1); ++m1)
        for (int m0 = 0; m0 < g.points(0); ++m0, ++flat) {
          if (std::abs(comp[static_cast<Eigen::Index>(flat)]) <= tol) continue;
          const int k0 = std::abs(g.freq_index(0, m0));
          const int k1 = g.dim() > 1 ? std::abs(g.freq_index(1, m1)) : 0;
          const int k2 = g.dim() > 2 ? std::abs(g.freq_index(2, m2)) : 0;
          extent[0] = std::max(extent[0], k0);
          extent[1] = std::max(extent[1], k1);
          extent[2] = std::max(extent[2], k2);
        }
  }
  return extent;
}

CheckReport bony_reconstruct_check(const FilterBank& bank, const RealField& v,
                                   const RealField& w) {
  require_scalar_pair(v, w);
  const Grid& g = v.grid();
  const auto ev = support_extent(v);
  const auto ew = support_extent(w);
  for (int a = 0; a < g.dim(); ++a)
    if (ev[a] + ew[a] > g.points(a) / 2 - 1)
      throw BandError("product spectrum escapes the resolved band");

  const BonyPieces pieces = bony_decompose(bank, v, w);
  RealField sum = pieces.t_vw + pieces.t_wv + pieces.remainder;
  const double lhs = l2_norm(sum - v * w);
  const double rhs = 1e-8 * l2_norm(v) * l2_norm(w);
  return CheckReport::bound("bony_reconstruction", lhs, rhs, 0.0);
}

}  // namespace lpns

#include "lpns/besov.hpp"

#include <cmath>

#include "lpns/fft.hpp"

namespace lpns {

namespace {

double recip(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

bool all_two(const MixedExponent& p) {
  for (int i = 0; i < p.size(); ++i)
    if (p[i] != 2.0) return false;
  return true;
}

void require_leq(const MixedExponent& a, const MixedExponent& b) {
  if (a.size() != b.size()) throw ExponentError("exponent tuples differ in length");
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) throw ExponentError("exponents must be entrywise ordered");
}

double sequence_norm(const std::vector<double>& x, double a) {
  if (std::isinf(a)) {
    double m = 0.0;
    for (double v : x) m = std::max(m, v);
    return m;
  }
  double s = 0.0;
  for (double v : x) s += std::pow(v, a);
  return std::pow(s, 1.0 / a);
}

}  // namespace

double critical_sigma(const MixedExponent& p, NormFlavor flavor) {
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i)
    s += flavor == NormFlavor::besov ? recip(p[i]) : 1.0 - recip(p[i]);
  if (!(s > 0.0))
    throw CriticalityError(flavor == NormFlavor::besov
                               ? "criticality needs sum 1/p_i > 0"
                               : "criticality needs sum (1 - 1/p_i) > 0");
  return -1.0 + s;
}

double block_norm(const FilterBank& bank, const SpectralField& G, int l,
                  const MixedExponent& p, NormFlavor flavor) {
  SpectralField piece = block_spectrum(bank, G, l);
  if (flavor == NormFlavor::fourier_besov) return mixed_norm(piece, p);
  if (all_two(p)) return l2_norm(piece);  // Parseval route
  return mixed_norm(idft(piece), p);
}

double dyadic_norm(const SpectralField& G, const BesovIndex& idx, const FilterBank& bank) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(bank.bands()));
  for (int l = bank.l_min(); l <= bank.l_max(); ++l)
    terms.push_back(std::exp2(l * idx.sigma) * block_norm(bank, G, l, idx.p, idx.flavor));
  return sequence_norm(terms, idx.q);
}

double dyadic_norm(const RealField& g, const BesovIndex& idx, const FilterBank& bank) {
  return dyadic_norm(dft(g), idx, bank);
}

double besov_norm(const RealField& g, const BesovIndex& idx, const FilterBank& bank) {
  if (idx.flavor != NormFlavor::besov)
    throw ExponentError("besov_norm expects a physical-flavor index");
  return dyadic_norm(g, idx, bank);
}

double fourier_besov_norm(const RealField& g, const BesovIndex& idx, const FilterBank& bank) {
  if (idx.flavor != NormFlavor::fourier_besov)
    throw ExponentError("fourier_besov_norm expects a frequency-flavor index");
  return dyadic_norm(g, idx, bank);
}

namespace {

void require_support(const SpectralField& G, double lambda, const SpectralSet& set) {
  const Grid& g = G.grid();
  const double lo = lambda * set.r_lo;
  const double hi = lambda * set.r_hi;
  double inside_max = 0.0, outside_max = 0.0;
  for (int c = 0; c < G.components(); ++c) {
    auto comp = G.component(c);
    for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& eta, bool nyq) {
      double r2 = 0.0;
      for (int a = 0; a < g.dim(); ++a) r2 += eta[a] * eta[a];
      const double r = std::sqrt(r2);
      const double v = std::abs(comp[static_cast<Eigen::Index>(i)]);
      const bool in = !nyq && r >= lo * (1.0 - 1e-12) && r <= hi * (1.0 + 1e-12);
      (in ? inside_max : outside_max) = std::max(in ? inside_max : outside_max, v);
    });
  }
  if (outside_max > 1e-12 * std::max(inside_max, 1e-300))
    throw SupportError("spectrum escapes the declared set");
}

std::vector<std::array<int, 3>> multi_indices(int d, int k) {
  std::vector<std::array<int, 3>> out;
  if (d == 2) {
    for (int a = 0; a <= k; ++a) out.push_back({a, k - a, 0});
  } else {
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b + a <= k; ++b) out.push_back({a, b, k - a - b});
  }
  return out;
}

double derivative_sup_norm(const SpectralField& G, int k, const MixedExponent& q,
                           NormFlavor flavor = NormFlavor::besov) {
  const Grid& g = G.grid();
  if (k == 0) {
    if (all_two(q)) return l2_norm(G);
    return mixed_norm(idft(G), q);
  }
  double best = 0.0;
  for (const auto& alpha : multi_indices(g.dim(), k)) {
    SpectralField D = G;
    for (int c = 0; c < D.components(); ++c) {
      auto comp = D.component(c);
      for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& eta, bool nyq) {
        if (nyq) {
          comp[static_cast<Eigen::Index>(i)] = 0.0;
          return;
        }
        std::complex<double> m(1.0, 0.0);
        for (int a = 0; a < g.dim(); ++a) {
          const std::complex<double> ie(0.0, eta[a]);
          for (int r = 0; r < alpha[a]; ++r) m *= ie;
        }
        comp[static_cast<Eigen::Index>(i)] *= m;
      });
    }
    const double v = all_two(q) ? l2_norm(D) : mixed_norm(idft(D), q);
    best = std::max(best, v);
  }
  (void)flavor;
  return best;
}

}  // namespace

double bernstein_ratio(const RealField& u, double lambda, int k, const MixedExponent& p,
                       const MixedExponent& q, const SpectralSet& set) {
  require_leq(p, q);
  SpectralField G = dft(u);
  require_support(G, lambda, set);
  const double base = mixed_norm(u, p);
  if (base == 0.0) return 0.0;
  double k0 = k;
  for (int i = 0; i < p.size(); ++i) k0 += recip(p[i]) - recip(q[i]);
  return derivative_sup_norm(G, k, q) / (std::pow(lambda, k0) * base);
}

double bernstein_lower_ratio(const RealField& u, double lambda, int k,
                             const MixedExponent& p, const SpectralSet& set) {
  SpectralField G = dft(u);
  require_support(G, lambda, set);
  const double base = mixed_norm(u, p);
  if (base == 0.0) return 0.0;
  return derivative_sup_norm(G, k, p) / (std::pow(lambda, k) * base);
}

std::vector<CheckReport> bernstein_check(const RealField& u, double lambda, int k,
                                         const MixedExponent& p, const MixedExponent& q,
                                         const SpectralSet& set, double c_bernstein) {
  std::vector<CheckReport> out;
  const double rho = bernstein_ratio(u, lambda, k, p, q, set);
  out.push_back(CheckReport::bound("bernstein_upper", rho,
                                   std::pow(c_bernstein, k + 1), 1e-12));
  if (set.annulus() && p == q) {
    const double low = bernstein_lower_ratio(u, lambda, k, p, set);
    out.push_back(CheckReport::bound("bernstein_lower",
                                     std::pow(c_bernstein, -(k + 1)), low, 1e-12));
  }
  return out;
}

double fb_bernstein_ratio(const RealField& g, const std::array<int, 3>& i_scales,
                          const std::array<int, 3>& beta, const MixedExponent& p,
                          const MixedExponent& q, const std::array<double, 3>& box) {
  require_leq(p, q);
  const Grid& grid = g.grid();
  SpectralField G = dft(g);

  double inside_max = 0.0, outside_max = 0.0;
  for_each_mode(grid, [&](std::size_t i, const std::array<double, 3>& eta, bool nyq) {
    bool in = !nyq;
    for (int a = 0; a < grid.dim(); ++a)
      in = in && std::abs(eta[a]) <= box[a] * std::exp2(i_scales[a]) * (1.0 + 1e-12);
    const double v = std::abs(G.component(0)[static_cast<Eigen::Index>(i)]);
    (in ? inside_max : outside_max) = std::max(in ? inside_max : outside_max, v);
  });
  if (outside_max > 1e-12 * std::max(inside_max, 1e-300))
    throw SupportError("spectrum escapes the declared anisotropic box");

  const double denom_norm = mixed_norm(G, q);
  if (denom_norm == 0.0) return 0.0;

  SpectralField W = G;
  auto comp = W.component(0);
  for_each_mode(grid, [&](std::size_t i, const std::array<double, 3>& eta, bool) {
    double w = 1.0;
    for (int a = 0; a < grid.dim(); ++a)
      for (int r = 0; r < beta[a]; ++r) w *= eta[a];
    comp[static_cast<Eigen::Index>(i)] *= w;
  });

  double k0 = 0.0;
  for (int a = 0; a < grid.dim(); ++a)
    k0 += i_scales[a] * (beta[a] + recip(p[a]) - recip(q[a]));
  return mixed_norm(W, p) / (std::exp2(k0) * denom_norm);
}

CheckReport fb_bernstein_check(const RealField& g, const std::array<int, 3>& i_scales,
                               const std::array<int, 3>& beta, const MixedExponent& p,
                               const MixedExponent& q, const std::array<double, 3>& box,
                               double c_bound) {
  const double ratio = fb_bernstein_ratio(g, i_scales, beta, p, q, box);
  return CheckReport::bound("fb_bernstein", ratio, c_bound, 1e-12);
}

std::vector<CheckReport> embedding_check(const RealField& g, const BesovIndex& idx1,
                                         const BesovIndex& idx2, const FilterBank& bank,
                                         double c_bernstein) {
  if (idx1.flavor != idx2.flavor) throw ExponentError("embedding flavors differ");
  const bool physical = idx1.flavor == NormFlavor::besov;

  double shift = 0.0;
  if (physical) {
    require_leq(idx1.p, idx2.p);
    if (idx2.sigma > idx1.sigma + 1e-12)
      throw ExponentError("embedding needs sigma_2 <= sigma_1");
    for (int i = 0; i < idx1.p.size(); ++i) shift += recip(idx1.p[i]) - recip(idx2.p[i]);
  } else {
    require_leq(idx2.p, idx1.p);
    if (idx2.sigma > idx1.sigma + 1e-12)
      throw ExponentError("embedding needs s_2 <= s_1");
    for (int i = 0; i < idx1.p.size(); ++i) shift += recip(idx2.p[i]) - recip(idx1.p[i]);
  }
  if (std::abs((idx1.sigma - idx2.sigma) - shift) > 1e-12)
    throw ExponentError("embedding index relation violated");
  if (idx1.q > idx2.q) throw ExponentError("embedding needs a_1 <= a_2");

  std::vector<CheckReport> out;
  SpectralField G = dft(g);

  std::vector<double> target_terms;
  for (int l = bank.l_min(); l <= bank.l_max(); ++l) {
    const double lhs = std::exp2(l * idx2.sigma) * block_norm(bank, G, l, idx2.p, idx2.flavor);
    const double rhs = std::exp2(l * idx1.sigma) * block_norm(bank, G, l, idx1.p, idx1.flavor);
    target_terms.push_back(lhs);
    if (lhs == 0.0 && rhs == 0.0) continue;
    out.push_back(CheckReport::bound("embedding_block l=" + std::to_string(l), lhs,
                                     c_bernstein * rhs, 1e-12));
  }

  out.push_back(CheckReport::bound("embedding_sequence",
                                   sequence_norm(target_terms, idx2.q),
                                   sequence_norm(target_terms, idx1.q), 1e-12));

  const double n1 = dyadic_norm(G, idx1, bank);
  const double n2 = dyadic_norm(G, idx2, bank);
  CheckReport end = CheckReport::bound("embedding_end_to_end", n2, c_bernstein * n1, 1e-12);
  end.note = n1 > 0.0 ? "ratio " + std::to_string(n2 / n1) : "zero field";
  out.push_back(end);
  return out;
}

}  // namespace lpns

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpns/corpus.hpp"
#include "lpns/fft.hpp"
#include "lpns/stokes.hpp"
#include "lpns/trajectory.hpp"

using namespace lpns;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInf = MixedExponent::inf;

// Grid whose lattice step 0.7 puts the mode |eta| = 1.4 inside the window
// where only block 0 is live.
Grid mode14_grid() { return Grid::uniform(2, 16, 2.0 * kPi / 0.7); }

RealField mode14_field(const Grid& g) {
  return sample_field(g, 1,
                      [](int, const std::array<double, 3>& x) { return std::cos(1.4 * x[0]); });
}
}  // namespace

TEST_SUITE_BEGIN("besov");

TEST_CASE("critical index formulas and their positivity guards") {
  CHECK(critical_sigma(MixedExponent({3.0, 3.0, 3.0}), NormFlavor::besov) ==
        doctest::Approx(0.0));
  CHECK(critical_sigma(MixedExponent({kInf, kInf, 4.0}), NormFlavor::besov) ==
        doctest::Approx(-1.0 + 0.25));
  CHECK(critical_sigma(MixedExponent({2.0, 1.0, 2.0}), NormFlavor::fourier_besov) ==
        doctest::Approx(0.0));
  CHECK_THROWS_AS(critical_sigma(MixedExponent({kInf, kInf}), NormFlavor::besov),
                  CriticalityError);
  CHECK_THROWS_AS(critical_sigma(MixedExponent({1.0, 1.0, 1.0}), NormFlavor::fourier_besov),
                  CriticalityError);
}

TEST_CASE("zero fields, single-block collapse, homogeneity") {
  const Grid g = mode14_grid();
  const FilterBank bank = FilterBank::build(g);
  const RealField zero(g, 1);
  const RealField f = mode14_field(g);

  for (double sigma : {-1.0, 0.0, 1.3}) {
    for (double q : {1.0, 2.0, kInf}) {
      const BesovIndex idx{sigma, MixedExponent({2.0, 2.0}), q, NormFlavor::besov};
      CHECK(besov_norm(zero, idx, bank) == 0.0);
      // One live block at l = 0, so every (sigma, q) collapses to ||f||_p.
      CHECK(besov_norm(f, idx, bank) ==
            doctest::Approx(mixed_norm(f, idx.p)).epsilon(1e-12));

      const BesovIndex fidx{sigma, MixedExponent({1.0, 1.0}), q, NormFlavor::fourier_besov};
      CHECK(fourier_besov_norm(f, fidx, bank) ==
            doctest::Approx(mixed_norm(dft(f), fidx.p)).epsilon(1e-12));

      CHECK(besov_norm(3.5 * f, idx, bank) ==
            doctest::Approx(3.5 * besov_norm(f, idx, bank)).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(
      besov_norm(f, BesovIndex{0.0, MixedExponent({2.0, 2.0}), 2.0, NormFlavor::fourier_besov},
                 bank),
      ExponentError);
}

TEST_CASE("q-exponent monotonicity with constant one") {
  const Grid g = Grid::uniform(2, 32, 2.0 * kPi);
  const FilterBank bank = FilterBank::build(g);
  Rng rng(41);
  const FieldSpec spec{g, 1, bank.covered_lo(), bank.covered_hi() * 0.9, false, 0.0};
  for (int i = 0; i < 20; ++i) {
    const RealField f = random_band_field(rng, spec);
    const BesovIndex q1{0.4, MixedExponent({2.0, 2.0}), 1.0, NormFlavor::besov};
    const BesovIndex qi{0.4, MixedExponent({2.0, 2.0}), kInf, NormFlavor::besov};
    CHECK(besov_norm(f, qi, bank) <= besov_norm(f, q1, bank) * (1.0 + 1e-15));
  }
}

TEST_CASE("bernstein: identity case, closed-form annulus mode, support guard") {
  const Grid g = Grid::uniform(2, 64, 2.0 * kPi);
  Rng rng(42);
  const FieldSpec spec{g, 1, 0.5, 2.0, false, 0.0};
  const RealField u = random_band_field(rng, spec);
  const MixedExponent p2 = MixedExponent({2.0, 2.0});

  CHECK(bernstein_ratio(u, 1.0, 0, p2, p2, SpectralSet::ball(2.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const RealField cos2 = sample_field(
      g, 1, [](int, const std::array<double, 3>& x) { return std::cos(2.0 * x[0]); });
  const double rho = bernstein_ratio(cos2, 2.0, 1, p2, p2, SpectralSet::dyadic_annulus());
  CHECK(rho == doctest::Approx(1.0).epsilon(1e-12));
  const auto reports = bernstein_check(cos2, 2.0, 1, p2, p2, SpectralSet::dyadic_annulus(), 1.5);
  CHECK(all_pass(reports));
  CHECK(reports.size() == 2);  // upper and lower bound in the annulus case

  CHECK_THROWS_AS(bernstein_ratio(u, 0.5, 0, p2, p2, SpectralSet::ball(1.0)), SupportError);
  CHECK_THROWS_AS(bernstein_ratio(u, 1.0, 0, MixedExponent({2.0, 2.0}),
                                  MixedExponent({1.0, 1.0}), SpectralSet::ball(2.0)),
                  ExponentError);
}

TEST_CASE("bernstein ratio is stable along rescaled families") {
  // The lambda^k0 law is about one profile observed across scales. On the
  // lattice the rescaling u -> u(lambda x) is exact grid re-dilation: the same
  // coefficients reinterpreted on a torus of period L / lambda.
  const Grid g = Grid::uniform(2, 64, 2.0 * kPi);
  Rng rng(43);
  const MixedExponent p1 = MixedExponent({1.0, 1.0});
  const MixedExponent p2 = MixedExponent({2.0, 2.0});
  const FieldSpec base_spec{g, 1, g.min_frequency(), 2.0, false, 0.0};
  for (int rep = 0; rep < 6; ++rep) {
    const SpectralField base = random_band_spectrum(rng, base_spec);
    double lo = 1e300, hi = 0.0;
    for (int factor : {1, 2, 4, 8}) {
      const Grid dilated = Grid::uniform(2, 64, 2.0 * kPi / factor);
      const double rho = bernstein_ratio(idft(with_grid(base, dilated)), factor, 1, p1, p2,
                                         SpectralSet::ball(2.0));
      lo = std::min(lo, rho);
      hi = std::max(hi, rho);
    }
    CHECK(hi / lo < 2.0);
    CHECK(hi / lo < 1.0 + 1e-10);  // the rescaling is exact, not just bounded
  }
}

TEST_CASE("frequency-side bernstein: single mode and the beta = 0 identity") {
  const Grid g = Grid::uniform(2, 32, 2.0 * kPi);
  const MixedExponent p2 = MixedExponent({2.0, 2.0});
  const RealField cos2 = sample_field(
      g, 1, [](int, const std::array<double, 3>& x) { return std::cos(2.0 * x[0]); });

  CHECK(fb_bernstein_ratio(cos2, {1, 0, 0}, {0, 0, 0}, p2, p2, {1.0, 1.0, 1.0}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fb_bernstein_ratio(cos2, {1, 0, 0}, {1, 0, 0}, p2, p2, {1.0, 1.0, 1.0}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fb_bernstein_check(cos2, {1, 0, 0}, {1, 0, 0}, p2, p2, {1.0, 1.0, 1.0}, 1.1).pass);
  CHECK_THROWS_AS(fb_bernstein_ratio(cos2, {0, 0, 0}, {0, 0, 0}, p2, p2, {1.0, 1.0, 1.0}),
                  SupportError);
}

TEST_CASE("embedding: identity, single block, max-versus-sum step") {
  const Grid g = mode14_grid();
  const FilterBank bank = FilterBank::build(g);
  const RealField f = mode14_field(g);
  const BesovIndex idx{0.3, MixedExponent({2.0, 2.0}), 1.0, NormFlavor::besov};

  const auto same = embedding_check(f, idx, idx, bank, 1.0);
  CHECK(all_pass(same));
  CHECK(same.back().lhs == doctest::Approx(same.back().rhs).epsilon(1e-12));

  // sigma drop of 1 matches p = (2,2) -> (inf,inf).
  const BesovIndex wide{idx.sigma - 1.0, MixedExponent({kInf, kInf}), kInf, NormFlavor::besov};
  const auto emb = embedding_check(f, idx, wide, bank, 2.0);
  CHECK(all_pass(emb));

  CHECK_THROWS_AS(
      embedding_check(f, idx,
                      BesovIndex{idx.sigma, MixedExponent({kInf, kInf}), 2.0, NormFlavor::besov},
                      bank, 2.0),
      ExponentError);
}

TEST_CASE("embedding sequence step on a multi-block field") {
  const Grid g = Grid::uniform(2, 64, 2.0 * kPi);
  const FilterBank bank = FilterBank::build(g);
  Rng rng(44);
  const FieldSpec spec{g, 1, bank.covered_lo(), bank.covered_hi() * 0.9, false, 0.0};
  const RealField f = random_band_field(rng, spec);
  const BesovIndex idx1{0.2, MixedExponent({2.0, 2.0}), 1.0, NormFlavor::besov};
  const BesovIndex idx2{0.2, MixedExponent({2.0, 2.0}), kInf, NormFlavor::besov};
  for (const auto& c : embedding_check(f, idx1, idx2, bank, 1.0))
    if (c.name == "embedding_sequence") CHECK(c.pass);
}

TEST_CASE("time-space norms: constant, exponential decay, domination") {
  const Grid g = mode14_grid();
  const FilterBank bank = FilterBank::build(g);
  const RealField f = mode14_field(g);
  const BesovIndex idx{0.5, MixedExponent({2.0, 2.0}), 2.0, NormFlavor::besov};

  SUBCASE("constant trajectory at a = inf equals the static norm") {
    std::vector<RealField> states(9, f);
    const Trajectory traj(0.125, std::move(states), 1.0);
    CHECK(timespace_norm(traj, idx, kInf, bank) ==
          doctest::Approx(besov_norm(f, idx, bank)).epsilon(1e-13));
    // max over samples dominates the static norm at every sample
    CHECK(timespace_norm(traj, idx, kInf, bank) >=
          besov_norm(traj.state(4), idx, bank) * (1.0 - 1e-15));
  }

  SUBCASE("e^{-t} profile integrates to 1 - 1/e") {
    const int n_t = 10001;
    const double dt = 1.0 / (n_t - 1);
    std::vector<RealField> states;
    states.reserve(n_t);
    for (int j = 0; j < n_t; ++j) states.push_back(std::exp(-j * dt) * f);
    const Trajectory traj(dt, std::move(states), 1.0);
    const double expected = (1.0 - std::exp(-1.0)) * besov_norm(f, idx, bank);
    CHECK(timespace_norm(traj, idx, 1.0, bank) ==
          doctest::Approx(expected).epsilon(1e-6));
  }

  SUBCASE("zero trajectory") {
    std::vector<RealField> states(4, RealField(g, 1));
    const Trajectory traj(0.25, std::move(states), 1.0);
    const ZNormParts z = z_norm(traj, idx, bank);
    CHECK(z.linf_part == 0.0);
    CHECK(z.l1_part == 0.0);
    CHECK(z.total == 0.0);
  }
}

TEST_CASE("z-norm of a heat trajectory matches the kernel integral") {
  const Grid g = mode14_grid();
  const FilterBank bank = FilterBank::build(g);
  const SemigroupParams params{1.0};
  // Divergence-free two-component single-mode field so heat_flow applies.
  const RealField u = sample_field(g, 2, [](int c, const std::array<double, 3>& x) {
    return c == 0 ? 0.0 : std::cos(1.4 * x[0]);
  });
  const double a = 1.4 * 1.4;  // decay rate of the only mode
  const double T = 6.0;
  const Trajectory traj = heat_flow(params, u, T, 4001);
  const BesovIndex idx{-1.0, MixedExponent({2.0, 2.0}), 1.0, NormFlavor::besov};
  const ZNormParts z = z_norm(traj, idx, bank);
  const double b0 = besov_norm(u, idx, bank);
  const double expected_l1 =
      std::exp2(0 * (idx.sigma + 2.0)) / std::exp2(0 * idx.sigma) * b0 *
      (1.0 - std::exp(-a * T)) / a;
  CHECK(z.l1_part == doctest::Approx(expected_l1).epsilon(1e-5));
  CHECK(z.linf_part == doctest::Approx(b0).epsilon(1e-12));

  const ZNormParts z2 = [&] {
    std::vector<RealField> scaled;
    for (int j = 0; j < traj.size(); ++j) scaled.push_back(2.0 * traj.state(j));
    return z_norm(Trajectory(traj.dt(), std::move(scaled), params.nu), idx, bank);
  }();
  CHECK(z2.total == doctest::Approx(2.0 * z.total).epsilon(1e-13));
}

TEST_SUITE_END();

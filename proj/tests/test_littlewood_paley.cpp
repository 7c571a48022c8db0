#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpns/corpus.hpp"
#include "lpns/fft.hpp"
#include "lpns/filter_bank.hpp"
#include "oracles.hpp"

using namespace lpns;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("littlewood_paley");

TEST_CASE("partition of unity on the covered band, zero at the origin") {
  const Grid g = Grid::uniform(2, 64, 2.0 * kPi);
  const FilterBank bank = FilterBank::build(g);
  CHECK(bank.l_min() < 0);
  CHECK(bank.l_max() >= 4);

  Eigen::ArrayXd sum = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(g.size()));
  for (int l = bank.l_min(); l <= bank.l_max(); ++l) {
    sum += bank.phi(l);
    CHECK(bank.phi(l)[0] == 0.0);  // eta = 0 belongs to no annulus
  }
  double worst = 0.0;
  for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& eta, bool nyq) {
    if (nyq) return;
    const double r = std::hypot(eta[0], eta[1]);
    if (r < bank.covered_lo() || r > bank.covered_hi()) return;
    worst = std::max(worst, std::abs(sum[static_cast<Eigen::Index>(i)] - 1.0));
  });
  CHECK(worst <= 1e-12);
}

TEST_CASE("single-block window (4/3, 3/2)") {
  // Radial profile: neighbors vanish there, so phi_0 must be exactly one.
  for (double r : {1.35, 1.40, 1.49}) {
    CHECK(FilterBank::profile(r) == 1.0);
    CHECK(FilterBank::profile(r / 2.0) == 0.0);
    CHECK(FilterBank::profile(2.0 * r) == 0.0);
  }
  // Off the window both neighbors are live and split the unit.
  CHECK(FilterBank::profile(2.0) > 0.0);
  CHECK(FilterBank::profile(2.0) < 1.0);
  CHECK(FilterBank::profile(2.0) + FilterBank::profile(1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("block of a constant vanishes; cos(2x) splits over blocks 0 and 1") {
  const Grid g = Grid::uniform(2, 64, 2.0 * kPi);
  const FilterBank bank = FilterBank::build(g);

  RealField constant(g, 1);
  constant.data().setConstant(2.0);
  for (int l = bank.l_min(); l <= bank.l_max(); ++l)
    CHECK(l2_norm(block(bank, constant, l)) == 0.0);

  const RealField f = sample_field(
      g, 1, [](int, const std::array<double, 3>& x) { return std::cos(2.0 * x[0]); });
  const RealField two_blocks = block(bank, f, 0) + block(bank, f, 1);
  CHECK(l2_norm(two_blocks - f) < 1e-12 * l2_norm(f));
  for (int l = bank.l_min(); l <= bank.l_max(); ++l) {
    if (l == 0 || l == 1) continue;
    CHECK(l2_norm(block(bank, f, l)) < 1e-14 * l2_norm(f));
  }

  CHECK_THROWS_AS(block(bank, f, bank.l_max() + 1), BandError);
}

TEST_CASE("a mode at |eta| = 1.4 lives in block 0 alone") {
  const Grid g = Grid::uniform(2, 64, 2.0 * kPi / 0.7);  // lattice step 0.7
  const FilterBank bank = FilterBank::build(g);
  const RealField f = sample_field(
      g, 1, [](int, const std::array<double, 3>& x) { return std::cos(1.4 * x[0]); });

  CHECK(l2_norm(block(bank, f, 0) - f) < 1e-13 * l2_norm(f));
  for (int l = bank.l_min(); l <= bank.l_max(); ++l) {
    if (l == 0) continue;
    CHECK(l2_norm(block(bank, f, l)) < 1e-14 * l2_norm(f));
  }

  SUBCASE("low-pass windows around the same mode") {
    CHECK(l2_norm(low_pass(bank, f, 2) - f) < 1e-13 * l2_norm(f));
    CHECK(l2_norm(low_pass(bank, f, 0)) < 1e-14 * l2_norm(f));
    CHECK(l2_norm(low_pass(bank, f, bank.l_min())) == 0.0);
    CHECK(l2_norm(low_pass(bank, f, bank.l_min() - 3)) == 0.0);
  }
}

TEST_CASE("band-limited reconstruction through the full low-pass") {
  const Grid g = Grid::uniform(2, 64, 2.0 * kPi);
  const FilterBank bank = FilterBank::build(g);
  Rng rng(31);
  const FieldSpec spec{g, 1, bank.covered_lo() * 1.01, bank.covered_hi() * 0.99, false, 0.0};
  const RealField f = random_band_field(rng, spec);
  CHECK(l2_norm(low_pass(bank, f, bank.l_max() + 1) - f) < 1e-11 * l2_norm(f));

  RealField sum(g, 1);
  for (int l = bank.l_min(); l <= bank.l_max(); ++l) sum = sum + block(bank, f, l);
  CHECK(l2_norm(sum - f) < 1e-11 * l2_norm(f));
}

TEST_CASE("block spectra are bit-zero outside their annuli") {
  const Grid g = Grid::uniform(2, 32, 2.0 * kPi);
  const FilterBank bank = FilterBank::build(g);
  Rng rng(32);
  const FieldSpec spec{g, 1, g.min_frequency(), 0.8 * g.max_frequency(), false, 0.0};
  const SpectralField F = dft(random_band_field(rng, spec));
  for (int l = bank.l_min(); l <= bank.l_max(); ++l) {
    const SpectralField piece = block_spectrum(bank, F, l);
    for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& eta, bool) {
      const double r = std::hypot(eta[0], eta[1]);
      const bool inside = r >= FilterBank::annulus_inner * std::exp2(l) &&
                          r <= FilterBank::annulus_outer * std::exp2(l);
      if (!inside) CHECK(std::abs(piece(0, i)) == 0.0);
    });
  }
}

TEST_CASE("block and low_pass are linear") {
  const Grid g = Grid::uniform(2, 32, 2.0 * kPi);
  const FilterBank bank = FilterBank::build(g);
  Rng rng(33);
  const FieldSpec spec{g, 1, g.min_frequency(), 0.8 * g.max_frequency(), false, 0.0};
  const RealField f = random_band_field(rng, spec);
  const RealField h = random_band_field(rng, spec);
  const int l = 1;
  const RealField lhs = block(bank, 2.5 * f + (-1.25) * h, l);
  const RealField rhs = 2.5 * block(bank, f, l) + (-1.25) * block(bank, h, l);
  CHECK(l2_norm(lhs - rhs) <= 1e-13 * (l2_norm(f) + l2_norm(h)));
}

TEST_CASE("almost orthogonality") {
  const Grid g = Grid::uniform(2, 32, 2.0 * kPi);
  const FilterBank bank = FilterBank::build(g);
  Rng rng(34);
  const FieldSpec spec{g, 1, bank.covered_lo(), bank.covered_hi() * 0.45, false, 0.0};
  const RealField f = random_band_field(rng, spec);
  const RealField h = random_band_field(rng, spec);
  const auto reports = almost_orthogonality_check(bank, f, h);
  CHECK(all_pass(reports));
  bool saw_adjacent = false;
  for (const auto& r : reports)
    if (r.name.rfind("block_composition_adjacent", 0) == 0 && r.lhs > 0.0) saw_adjacent = true;
  CHECK(saw_adjacent);  // adjacent blocks overlap generically

  const RealField zero(g, 1);
  CHECK(all_pass(almost_orthogonality_check(bank, zero, zero)));
}

TEST_SUITE_END();

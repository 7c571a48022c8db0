#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpns/corpus.hpp"
#include "lpns/fft.hpp"
#include "oracles.hpp"

using namespace lpns;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInf = MixedExponent::inf;

RealField random_field(Rng& rng, const Grid& g) {
  return random_band_field(rng, {g, 1, g.min_frequency(), 0.85 * g.max_frequency(), false, 0.0});
}
}  // namespace

TEST_SUITE_BEGIN("mixed_lebesgue");

TEST_CASE("exponent validation and conjugates") {
  CHECK_THROWS_AS(MixedExponent({0.5, 2.0}), ExponentError);
  CHECK(conjugate_exponent(MixedExponent({2.0, 2.0})) == MixedExponent({2.0, 2.0}));
  CHECK(conjugate_exponent(MixedExponent({1.0, kInf})) == MixedExponent({kInf, 1.0}));
  const MixedExponent c = conjugate_exponent(MixedExponent({4.0, 4.0 / 3.0}));
  CHECK(c[0] == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(c[1] == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("mixed norm of zero and equal-exponent reduction to plain Lp") {
  const Grid g = Grid::uniform(2, 16, 3.0);
  CHECK(mixed_norm(RealField(g, 1), MixedExponent({2.0, 2.0})) == 0.0);

  Rng rng(21);
  const RealField f = random_field(rng, g);
  for (double p : {1.0, 2.0, 3.0}) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) s += std::pow(std::abs(f(0, i)), p);
    const double plain = std::pow(s * g.cell_volume(), 1.0 / p);
    CHECK(mixed_norm(f, MixedExponent::uniform(2, p)) ==
          doctest::Approx(plain).epsilon(1e-12));
  }
}

TEST_CASE("mixed norm matches the nested-loop oracle on uneven exponents") {
  const Grid g = Grid(2, {16, 8, 1}, {2.0, 5.0, 1.0});
  Rng rng(22);
  const RealField f = random_field(rng, g);
  for (const MixedExponent& p :
       {MixedExponent({1.0, 3.0}), MixedExponent({4.0, 4.0 / 3.0}),
        MixedExponent({kInf, 2.0}), MixedExponent({2.0, kInf})}) {
    CHECK(mixed_norm(f, p) ==
          doctest::Approx(oracles::brute_mixed_norm(f, p)).epsilon(1e-13));
  }
}

TEST_CASE("Gaussian closed forms distinguish the axis order") {
  // Centered Gaussians on a large torus; quadrature error is far below 1e-6.
  const Grid g = Grid::uniform(2, 64, 20.0);
  const double half = 10.0;
  const RealField iso = sample_field(g, 1, [&](int, const std::array<double, 3>& x) {
    const double u = x[0] - half, v = x[1] - half;
    return std::exp(-u * u - v * v);
  });
  CHECK(mixed_norm(iso, MixedExponent({1.0, kInf})) ==
        doctest::Approx(std::sqrt(kPi)).epsilon(1e-6));

  const RealField aniso = sample_field(g, 1, [&](int, const std::array<double, 3>& x) {
    const double u = x[0] - half, v = x[1] - half;
    return std::exp(-u * u - 4.0 * v * v);
  });
  CHECK(mixed_norm(aniso, MixedExponent({1.0, kInf})) ==
        doctest::Approx(std::sqrt(kPi)).epsilon(1e-6));
  CHECK(mixed_norm(aniso, MixedExponent({kInf, 1.0})) ==
        doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-6));
}

TEST_CASE("holder: constants saturate, Cauchy-Schwarz, squares") {
  const Grid g = Grid::uniform(2, 16, 2.0 * kPi);
  Rng rng(23);
  const RealField f = random_field(rng, g);

  RealField ones(g, 1);
  ones.data().setConstant(1.0);
  const CheckReport sat =
      holder_product_check(f, ones, MixedExponent({2.0, 2.0}), MixedExponent({kInf, kInf}));
  CHECK(sat.pass);
  CHECK(sat.lhs == doctest::Approx(sat.rhs).epsilon(1e-14));

  const RealField h = random_field(rng, g);
  CHECK(holder_product_check(f, h, MixedExponent({2.0, 2.0}), MixedExponent({2.0, 2.0})).pass);

  const CheckReport sq =
      holder_product_check(f, f, MixedExponent({4.0, 4.0}), MixedExponent({4.0, 4.0}));
  CHECK(sq.pass);

  CHECK_THROWS_AS(
      holder_product_check(f, h, MixedExponent({1.0, 1.0}), MixedExponent({2.0, 2.0})),
      ExponentError);
}

TEST_CASE("young: approximate identity, Fubini equality, signed case") {
  const Grid g = Grid::uniform(2, 16, 2.0 * kPi);
  Rng rng(24);

  // Single-cell mass normalized to ||phi||_1 = 1 behaves like an identity.
  RealField delta(g, 1);
  delta(0, 0) = 1.0 / g.cell_volume();
  const RealField h = random_field(rng, g);
  const RealField conv = circular_convolve(delta, h);
  CHECK(l2_norm(conv - h) < 1e-12 * l2_norm(h));
  const CheckReport near = young_convolution_check(delta, h, MixedExponent({2.0, 2.0}));
  CHECK(near.pass);
  CHECK(near.lhs == doctest::Approx(near.rhs).epsilon(1e-12));

  // Nonnegative phi, g at p = (1,1): equality by Fubini.
  RealField pos_phi = random_field(rng, g);
  RealField pos_g = random_field(rng, g);
  pos_phi.data() = pos_phi.data().abs();
  pos_g.data() = pos_g.data().abs();
  const CheckReport fub = young_convolution_check(pos_phi, pos_g, MixedExponent({1.0, 1.0}));
  CHECK(fub.pass);
  CHECK(fub.lhs == doctest::Approx(fub.rhs).epsilon(1e-12));

  CHECK(young_convolution_check(random_field(rng, g), random_field(rng, g),
                                MixedExponent({2.0, kInf}))
            .pass);
}

TEST_CASE("hausdorff-young: Parseval at p=2, sup bound at p=1, mixed case") {
  const Grid g = Grid::uniform(2, 16, 2.0 * kPi);
  Rng rng(25);
  const RealField f = random_field(rng, g);

  const CheckReport pars = hausdorff_young_check(f, MixedExponent({2.0, 2.0}));
  CHECK(pars.pass);
  CHECK(pars.lhs == doctest::Approx(pars.rhs).epsilon(1e-12));

  const CheckReport l1 = hausdorff_young_check(f, MixedExponent({1.0, 1.0}));
  CHECK(l1.pass);
  // Independent route: sup |dft f| against the weighted l1 sum.
  const SpectralField F = dft(f);
  const double sup = F.component(0).abs().maxCoeff();
  const double sum = f.data().abs().sum() * g.cell_volume();
  CHECK(sup <= sum * (1.0 + 1e-12));

  CHECK(hausdorff_young_check(f, MixedExponent({2.0, 1.0})).pass);

  CHECK_THROWS_AS(hausdorff_young_check(f, MixedExponent({1.0, 2.0})), ExponentError);
  CHECK_THROWS_AS(hausdorff_young_check(f, MixedExponent({3.0, 1.0})), ExponentError);
}

TEST_CASE("homogeneity and triangle inequality properties") {
  const Grid g = Grid::uniform(2, 16, 2.0 * kPi);
  Rng rng(26);
  for (int i = 0; i < 50; ++i) {
    const RealField f = random_field(rng, g);
    const RealField h = random_field(rng, g);
    const double alpha = 3.0 * rng.symmetric();
    for (const MixedExponent& p :
         {MixedExponent({2.0, 2.0}), MixedExponent({1.0, kInf}), MixedExponent({4.0, 3.0})}) {
      const double nf = mixed_norm(f, p);
      CHECK(std::abs(mixed_norm(alpha * f, p) - std::abs(alpha) * nf) <=
            1e-13 * std::abs(alpha) * nf + 1e-300);
      CHECK(mixed_norm(f + h, p) <= (nf + mixed_norm(h, p)) * (1.0 + 1e-12));
    }
  }
}

TEST_SUITE_END();

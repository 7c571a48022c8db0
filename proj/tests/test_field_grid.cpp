#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpns/corpus.hpp"
#include "lpns/fft.hpp"
#include "oracles.hpp"

using namespace lpns;

namespace {
constexpr double kPi = std::numbers::pi;

RealField random_full_band(Rng& rng, const Grid& g, int comps = 1) {
  FieldSpec spec{g, comps, g.min_frequency(), 0.9 * g.max_frequency(), false, 0.0};
  return random_band_field(rng, spec);
}
}  // namespace

TEST_SUITE_BEGIN("field_grid");

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(Grid::uniform(4, 16, 1.0), ShapeError);
  CHECK_THROWS_AS(Grid::uniform(2, 12, 1.0), ShapeError);
  CHECK_THROWS_AS(Grid::uniform(2, 4, 1.0), ShapeError);
  CHECK_THROWS_AS(Grid::uniform(2, 16, -1.0), ShapeError);
  const Grid g = Grid::uniform(2, 16, 2.0 * kPi);
  CHECK(g.size() == 256);
  CHECK(g.freq_index(0, 8) == -8);
  CHECK(g.nyquist(0, 8));
  CHECK(g.eta(0, 15) == doctest::Approx(-1.0));
}

TEST_CASE("dft of zero and of a single cosine mode") {
  const Grid g = Grid::uniform(2, 16, 2.0 * kPi);
  const SpectralField Z = dft(RealField(g, 1));
  CHECK(Z.data().abs().maxCoeff() == 0.0);

  const RealField f =
      sample_field(g, 1, [](int, const std::array<double, 3>& x) { return std::cos(x[0]); });
  const SpectralField F = dft(f);
  int nonzero = 0;
  for_each_mode(g, [&](std::size_t i, const std::array<double, 3>&, bool) {
    if (std::abs(F(0, i)) > 1e-12) ++nonzero;
  });
  CHECK(nonzero == 2);
  CHECK(l2_norm(F) == doctest::Approx(l2_norm(f)).epsilon(1e-12));
}

TEST_CASE("dft matches the direct two-sided summation oracle") {
  const Grid g = Grid(2, {16, 8, 1}, {2.0 * kPi, 4.0, 1.0});
  Rng rng(7);
  const RealField f = random_full_band(rng, g);
  const SpectralField F = dft(f);
  const auto direct = oracles::direct_dft(f);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    worst = std::max(worst, std::abs(F(0, i) - direct[i]));
  CHECK(worst < 1e-12 * F.data().abs().maxCoeff());
}

TEST_CASE("round trip and Parseval, 1000 random fields") {
  const Grid g = Grid::uniform(2, 16, 2.0 * kPi);
  Rng rng(11);
  double worst_rt = 0.0, worst_pars = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const RealField f = random_full_band(rng, g);
    const SpectralField F = dft(f);
    const double n = l2_norm(f);
    worst_rt = std::max(worst_rt, l2_norm(idft(F) - f) / n);
    worst_pars = std::max(worst_pars, std::abs(l2_norm(F) - n) / n);
  }
  CHECK(worst_rt < 1e-12);
  CHECK(worst_pars < 1e-12);
}

TEST_CASE("non-finite samples are rejected") {
  const Grid g = Grid::uniform(2, 8, 1.0);
  RealField f(g, 1);
  f(0, 3) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(dft(f), InvalidFieldError);
}

TEST_CASE("idft rejects asymmetric coefficients") {
  const Grid g = Grid::uniform(2, 8, 1.0);
  SpectralField F(g, 1);
  F(0, 1) = {1.0, 2.0};  // no conjugate partner
  CHECK_THROWS_AS(idft(F), AsymmetryError);
}

TEST_CASE("idft of a symmetric single mode is a pure cosine") {
  const Grid g = Grid::uniform(2, 16, 2.0 * kPi);
  SpectralField F(g, 1);
  F(0, 1) = {0.5, 0.0};
  F(0, g.mirror_index(1)) = {0.5, 0.0};
  const RealField f = idft(F);
  const double amp = f(0, 0);
  CHECK(amp != 0.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = (i % 16) * g.spacing(0);
    worst = std::max(worst, std::abs(f(0, i) - amp * std::cos(x)));
  }
  CHECK(worst < 1e-12 * std::abs(amp));
}

TEST_CASE("derivative closed form and identity order") {
  const Grid g = Grid::uniform(2, 32, 2.0 * kPi);
  const RealField f =
      sample_field(g, 1, [](int, const std::array<double, 3>& x) { return std::sin(x[0]); });
  const RealField df = derivative(f, 0, 1);
  const RealField expected =
      sample_field(g, 1, [](int, const std::array<double, 3>& x) { return std::cos(x[0]); });
  CHECK(l2_norm(df - expected) < 1e-12 * l2_norm(expected));

  const RealField same = derivative(f, 0, 0);
  CHECK(l2_norm(same - f) == 0.0);

  RealField constant(g, 1);
  constant.data().setConstant(3.5);
  CHECK(l2_norm(derivative(constant, 1, 1)) < 1e-13);

  CHECK_THROWS_AS(derivative(f, 2, 1), IndexError);
}

TEST_CASE("derivative commutes with dft as a diagonal multiplier") {
  const Grid g = Grid::uniform(2, 16, 2.0 * kPi);
  Rng rng(3);
  const RealField f = random_full_band(rng, g);
  const SpectralField lhs = dft(derivative(f, 1, 2));
  SpectralField rhs = dft(f);
  auto comp = rhs.component(0);
  for_each_mode(g, [&](std::size_t i, const std::array<double, 3>& eta, bool nyq) {
    const std::complex<double> ie(0.0, eta[1]);
    comp[static_cast<Eigen::Index>(i)] *= nyq ? std::complex<double>(0.0) : ie * ie;
  });
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    worst = std::max(worst, std::abs(lhs(0, i) - rhs(0, i)));
  CHECK(worst <= 1e-11 * rhs.data().abs().maxCoeff());
}

TEST_CASE("divergence closed forms") {
  const Grid g = Grid::uniform(2, 32, 2.0 * kPi);
  const RealField shear = sample_field(g, 2, [](int c, const std::array<double, 3>& x) {
    return c == 0 ? std::sin(x[1]) : 0.0;
  });
  CHECK(l2_norm(divergence(shear)) < 1e-12 * l2_norm(shear));

  const RealField stretch = sample_field(g, 2, [](int c, const std::array<double, 3>& x) {
    return c == 0 ? std::sin(x[0]) : 0.0;
  });
  const RealField expected =
      sample_field(g, 1, [](int, const std::array<double, 3>& x) { return std::cos(x[0]); });
  CHECK(l2_norm(divergence(stretch) - expected) < 1e-12 * l2_norm(expected));

  RealField wrong(g, 1);
  CHECK_THROWS_AS(divergence(wrong), ShapeError);
}

TEST_CASE("divergence of a gradient is the spectral Laplacian") {
  const Grid g = Grid::uniform(2, 16, 2.0 * kPi);
  Rng rng(5);
  const RealField s = random_full_band(rng, g);
  RealField grad(g, 2);
  for (int a = 0; a < 2; ++a) grad.component(a) = derivative(s, a, 1).component(0);
  const RealField lap = divergence(grad);
  const RealField expected = derivative(s, 0, 2) + derivative(s, 1, 2);
  CHECK(l2_norm(lap - expected) < 1e-12 * std::max(l2_norm(expected), 1e-30));
}

TEST_SUITE_END();

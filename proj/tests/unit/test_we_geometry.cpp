#include <cmath>
#include <numbers>

#include "doctest.h"
#include "minstab/errors.hpp"
#include "minstab/isotropy.hpp"
#include "minstab/oracle.hpp"
#include "minstab/we_geometry.hpp"
#include "random_data.hpp"

using namespace minstab;
using minstab::testing::Rng;

namespace {

constexpr Complex I{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

bool near(Complex a, Complex b, double tol = 1e-15) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("from_r3: Enneper expansion") {
  const WEData d = testing::enneper(8);
  CHECK(d.dimension() == 3);
  CHECK(near(d.coefficient(0, 0), 0.5));
  CHECK(near(d.coefficient(0, 1), 0.0));
  CHECK(near(d.coefficient(0, 2), -0.5));
  CHECK(near(d.coefficient(1, 0), 0.5 * I));
  CHECK(near(d.coefficient(1, 2), 0.5 * I));
  CHECK(near(d.coefficient(2, 1), 1.0));
  CHECK(near(d.coefficient(2, 0), 0.0));
  CHECK(conformality_residual(d) <= 1e-14);
}

TEST_CASE("from_r3: constant g is a plane; zero f is rejected") {
  const WEData d = from_r3(R3Rep(CoefficientSeries{1.0}, CoefficientSeries{0.0}), 4);
  CHECK(near(d.coefficient(0, 0), 0.5));
  CHECK(near(d.coefficient(1, 0), 0.5 * I));
  CHECK(d.alpha(2).is_zero());
  CHECK_THROWS_AS(R3Rep(CoefficientSeries{0.0, 0.0}, CoefficientSeries{0.0, 1.0}), InvalidInput);
  CHECK_THROWS_AS(from_r3(R3Rep(CoefficientSeries{1.0, 1.0}, CoefficientSeries{0.0, 0.0, 1.0}), 4),
                  CapacityError);
}

TEST_CASE("R3Rep indices") {
  const R3Rep rep(CoefficientSeries{0.0, 0.0, 2.0}, CoefficientSeries{1.0, 0.0, 0.0, 3.0});
  CHECK(rep.k() == 2);
  REQUIRE(rep.m());
  CHECK(*rep.m() == 3);
  CHECK_FALSE(R3Rep(CoefficientSeries{1.0}, CoefficientSeries{5.0}).m());
}

TEST_CASE("conformality_residual") {
  CHECK(conformality_residual(testing::plane()) == 0.0);
  const WEData flat({CoefficientSeries{1.0}, CoefficientSeries{1.0}});
  CHECK(conformality_residual(flat) == doctest::Approx(2.0));
  CHECK(flat.conformality_residual() == doctest::Approx(2.0));
}

TEST_CASE("from_r3 output is always conformal") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const WEData d = from_r3(testing::random_r3(rng, 32), 32);
    CHECK(conformality_residual(d) <= 1e-12);
  }
}

TEST_CASE("surface_point: linear data and base point") {
  const auto p = surface_point(testing::plane(), Complex{1.0, 1.0});
  CHECK(p[0] == doctest::Approx(2.0));
  CHECK(p[1] == doctest::Approx(-2.0));

  const WEData d({CoefficientSeries{1.0, 2.0}, CoefficientSeries{I}}, {3.0, -4.0});
  const auto origin = surface_point(d, 0.0);
  CHECK(origin[0] == 3.0);
  CHECK(origin[1] == -4.0);
}

TEST_CASE("surface_point matches line integration of 2 Re(alpha dz)") {
  const WEData d = testing::enneper();
  const Complex z{0.5, 0.0};
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(20, x, w);
  std::vector<double> expected(3, 0.0);
  for (std::size_t q = 0; q < x.size(); ++q) {
    const Complex t = z * 0.5 * (x[q] + 1.0);
    for (int i = 0; i < 3; ++i) {
      expected[static_cast<std::size_t>(i)] += 0.5 * w[q] * 2.0 * std::real(evaluate(d.alpha(i), t) * z);
    }
  }
  const auto got = surface_point(d, z);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(got[static_cast<std::size_t>(i)] - expected[static_cast<std::size_t>(i)]) <= 1e-10);
}

TEST_CASE("surface_point is harmonic: mean value over a circle") {
  Rng rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const WEData d = testing::random_conformal_data(rng, 4, 32);
    const int samples = 64;
    std::vector<double> mean(4, 0.0);
    for (int t = 0; t < samples; ++t) {
      const auto p = surface_point(d, std::polar(0.1, 2.0 * kPi * t / samples));
      for (int i = 0; i < 4; ++i) mean[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i)] / samples;
    }
    const auto centre = surface_point(d, 0.0);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(mean[static_cast<std::size_t>(i)] - centre[static_cast<std::size_t>(i)]) <= 1e-8);
  }
}

TEST_CASE("gauss_map canonical form") {
  const auto g = gauss_map(testing::plane(), Complex{0.3, -2.0});
  CHECK(near(g[0], 1.0 / std::sqrt(2.0), 1e-15));
  CHECK(near(g[1], I / std::sqrt(2.0), 1e-15));

  const auto e = gauss_map(testing::enneper(), 0.0);
  CHECK(near(e[0], 1.0 / std::sqrt(2.0), 1e-15));
  CHECK(near(e[1], I / std::sqrt(2.0), 1e-15));
  CHECK(near(e[2], 0.0));

  // Synthetic data with a common zero at z = 1.
  const WEData degenerate({CoefficientSeries{-1.0, 1.0}, CoefficientSeries{-I, I}});
  CHECK_THROWS_AS(gauss_map(degenerate, 1.0), DegenerateGaussMap);
}

TEST_CASE("twist: identity, Gauss map and isotropy preserved") {
  const WEData e = testing::enneper();
  const WEData same = twist(e, CoefficientSeries{1.0});
  for (int i = 0; i < 3; ++i) CHECK(same.alpha(i) == e.alpha(i));

  const WEData tz = twist(e, CoefficientSeries{0.0, 1.0});
  CHECK(projectively_equal(gauss_map(tz, 0.3), gauss_map(e, 0.3), 1e-10));
  const auto a = gauss_map(tz, 0.3);
  const auto b = gauss_map(e, 0.3);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(near(a[i], b[i], 1e-12));

  Rng rng(33);
  const WEData twisted = twist(testing::plane(), testing::random_series(rng, 6, 6));
  const GramTable g = gram(twisted, twisted.n_max());
  CHECK(g.max_abs() <= 1e-13);

  CHECK_THROWS_AS(twist(e, CoefficientSeries{0.0}), InvalidInput);
  CHECK_THROWS_AS(twist(testing::enneper(4), CoefficientSeries{0.0, 0.0, 0.0, 1.0}), CapacityError);
}

TEST_CASE("twist keeps the base point") {
  const WEData d({CoefficientSeries{1.0}, CoefficientSeries{I}}, {1.0, 2.0}, 8);
  const WEData t = twist(d, CoefficientSeries{2.0, 1.0});
  CHECK(t.base_point()[0] == 1.0);
  CHECK(t.base_point()[1] == 2.0);
}

TEST_CASE("spherical_area_coefficient") {
  CHECK(spherical_area_coefficient(R3Rep(CoefficientSeries{1.0}, CoefficientSeries{0.0, 1.0})) ==
        doctest::Approx(4.0 * kPi));
  CHECK(spherical_area_coefficient(R3Rep(CoefficientSeries{1.0}, CoefficientSeries{I})) == 0.0);
  CHECK(spherical_area_coefficient(R3Rep(CoefficientSeries{1.0}, CoefficientSeries{1.0, 2.0})) ==
        doctest::Approx(4.0 * kPi));
}

TEST_CASE("WEData validation") {
  CHECK_THROWS_AS(WEData({CoefficientSeries{1.0}}), InvalidInput);
  CHECK_THROWS_AS(WEData({CoefficientSeries{0.0}, CoefficientSeries{0.0}}), InvalidInput);
  CHECK_THROWS_AS(WEData({CoefficientSeries{1.0}, CoefficientSeries{I}}, {1.0}), InvalidInput);
  CHECK_THROWS_AS(WEData({CoefficientSeries{1.0, 0.0, 1.0}, CoefficientSeries{I}}, {}, 1), CapacityError);
}

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "minstab/errors.hpp"
#include "minstab/oracle.hpp"
#include "random_data.hpp"

using namespace minstab;
using minstab::testing::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

RayleighOptions coarse_grid() {
  RayleighOptions o;
  o.radial = 80;
  o.angular = 96;
  return o;
}

}  // namespace

TEST_CASE("gauss_legendre integrates polynomials") {
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(6, x, w);
  for (int p = 0; p <= 11; ++p) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += w[i] * std::pow(x[i], p);
    const double exact = (p % 2 == 1) ? 0.0 : 2.0 / (p + 1);
    CHECK(std::abs(sum - exact) <= 1e-14);
  }
}

TEST_CASE("monomial_integral on the disk") {
  CHECK(std::abs(monomial_integral(0, 0) - Complex{kPi}) <= 1e-13);
  CHECK(std::abs(monomial_integral(1, 1) - Complex{kPi / 2.0}) <= 1e-13);
  CHECK(std::abs(monomial_integral(3, 3) - Complex{kPi / 4.0}) <= 1e-13);
  CHECK(std::abs(monomial_integral(2, 0)) <= 1e-13);
  CHECK(std::abs(monomial_integral(0, 5)) <= 1e-13);
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b) {
      const Complex expected = a == b ? Complex{2.0 * kPi / (a + b + 2)} : Complex{};
      CHECK(std::abs(monomial_integral(a, b) - expected) <= 1e-10);
    }
}

TEST_CASE("DiskQuadrature exactness bookkeeping") {
  const DiskQuadrature q = DiskQuadrature::for_capacity(8);
  CHECK(q.radial_count() == 10);
  CHECK(q.angular_count() == 36);
  CHECK(q.exactness() == 18);
  CHECK(std::abs(q.integrate([](Complex) { return 1.0; }) - kPi) <= 1e-13);
}

TEST_CASE("F_h_quadrature: worked values") {
  const WEData plane = testing::plane();
  const auto phi = TestFunction::two_term(1, 1, 0.0, 0.0);
  // Plane: v = (conj z, i conj z), F = 2 pi.
  CHECK(std::abs(F_h_quadrature(plane, phi, 1.0) - 2.0 * kPi) <= 1e-10);
  CHECK(std::abs(F_h_quadrature(plane, phi, 0.3) - 2.0 * kPi) <= 1e-10);

  const WEData enneper = testing::enneper();
  for (double r : {0.25, 0.5, 1.0, 1.5, 2.0}) {
    CHECK(std::abs(F_h_quadrature(enneper, phi, r) - kPi / 2.0 * (1.0 - r * r)) <= 1e-10 * (1.0 + r * r));
  }
  CHECK_THROWS_AS(F_h_quadrature(testing::enneper(4), TestFunction::two_term(1, 3, 0.0, 1.0), 1.0),
                  CapacityError);
}

TEST_CASE("F_h_quadrature is quadratic in y") {
  Rng rng(51);
  const WEData d = testing::random_data(rng, 4, 5, 16);
  const double r = 0.8;
  auto at = [&](double y) { return F_h_quadrature(d, TestFunction::two_term(1, 3, 0.7, y), r); };
  const double f0 = at(0.0);
  const double f1 = at(1.0);
  const double fm = at(-1.0);
  const double f2 = at(2.0);
  const double a = (f1 + fm) / 2.0 - f0;
  const double b = (f1 - fm) / 2.0;
  CHECK(std::abs(f2 - (4.0 * a + 2.0 * b + f0)) <= 1e-9 * (1.0 + std::abs(f2)));
}

TEST_CASE("rayleigh_r3: Enneper sign pattern") {
  const R3Rep enneper(CoefficientSeries{1.0}, CoefficientSeries{0.0, 1.0});
  CHECK(rayleigh_r3(enneper, 0.5, coarse_grid()).eigenvalue > 0.0);
  CHECK(rayleigh_r3(enneper, 1.3, coarse_grid()).eigenvalue < 0.0);
}

TEST_CASE("rayleigh_r3: constant Gauss map reduces to the Dirichlet problem") {
  const R3Rep plane(CoefficientSeries{1.0}, CoefficientSeries{0.5});
  const RayleighEstimate e = rayleigh_r3(plane, 1.0, coarse_grid());
  // First Dirichlet eigenvalue of the unit disk: j_{0,1}^2.
  CHECK(std::abs(e.eigenvalue - 2.404825557695773 * 2.404825557695773) <= 2e-2);
  CHECK(e.eigenvalue > 0.0);
  const RayleighEstimate half = rayleigh_r3(plane, 2.0, coarse_grid());
  CHECK(std::abs(half.eigenvalue * 4.0 - e.eigenvalue) <= 1e-6 * e.eigenvalue);
}

TEST_CASE("rayleigh_r3: sign change brackets the Enneper threshold") {
  const R3Rep enneper(CoefficientSeries{1.0}, CoefficientSeries{0.0, 1.0});
  double prev = rayleigh_r3(enneper, 0.5, coarse_grid()).eigenvalue;
  double flip = -1.0;
  for (int i = 1; i <= 10; ++i) {
    const double r = 0.5 + 0.1 * i;
    const double lam = rayleigh_r3(enneper, r, coarse_grid()).eigenvalue;
    if (prev > 0.0 && lam <= 0.0 && flip < 0.0) flip = r;
    prev = lam;
  }
  CHECK(flip >= 0.9);
  CHECK(flip <= 1.15);
}

TEST_CASE("rayleigh_r3 rejects nonpositive radius") {
  const R3Rep enneper(CoefficientSeries{1.0}, CoefficientSeries{0.0, 1.0});
  CHECK_THROWS_AS(rayleigh_r3(enneper, 0.0), InvalidInput);
}

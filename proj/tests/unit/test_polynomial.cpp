#include <cmath>

#include "doctest.h"
#include "minstab/errors.hpp"
#include "minstab/polynomial.hpp"
#include "random_data.hpp"

using namespace minstab;

TEST_CASE("smallest_positive_root: worked examples") {
  const auto one = smallest_positive_root(RealPolynomial({1.0, 0.0, -1.0}));
  REQUIRE(one);
  CHECK(*one == doctest::Approx(1.0).epsilon(1e-13));

  CHECK_FALSE(smallest_positive_root(RealPolynomial({1.0, 0.0, 1.0})));

  // -2 r^4 + r^2 + 2: quadratic in r^2, root r^2 = (1 + sqrt 17) / 4.
  const RealPolynomial quartic({2.0, 0.0, 1.0, 0.0, -2.0});
  const double expected = std::sqrt((1.0 + std::sqrt(17.0)) / 4.0);
  const auto root = smallest_positive_root(quartic, 1e-13);
  REQUIRE(root);
  CHECK(std::abs(*root - expected) <= 1e-10);
  CHECK(std::abs(*root - 1.1317139242) <= 1e-9);
  CHECK(quartic(*root - 1e-9) > 0.0);
  CHECK(quartic(*root + 1e-9) < 0.0);

  CHECK_THROWS_AS(smallest_positive_root(RealPolynomial({0.0, 0.0})), InvalidInput);
}

TEST_CASE("smallest_positive_root ignores the origin and negative roots") {
  // r (r + 1)(r - 2)(r - 3)
  const RealPolynomial p = RealPolynomial({0.0, 1.0}) * RealPolynomial({1.0, 1.0}) *
                           RealPolynomial({-2.0, 1.0}) * RealPolynomial({-3.0, 1.0});
  const auto root = smallest_positive_root(p);
  REQUIRE(root);
  CHECK(*root == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("smallest_positive_root finds a double root") {
  const RealPolynomial p = RealPolynomial({-1.5, 1.0}) * RealPolynomial({-1.5, 1.0}) * RealPolynomial({4.0, 0.0, 1.0});
  const auto root = smallest_positive_root(p);
  REQUIRE(root);
  CHECK(std::abs(*root - 1.5) < 1e-6);
}

TEST_CASE("root isolation matches brute-force sign scanning on random products") {
  minstab::testing::Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> roots;
    RealPolynomial p({1.0});
    const int count = minstab::testing::uniform_int(rng, 1, 5);
    double smallest = 1e300;
    for (int i = 0; i < count; ++i) {
      const double x = minstab::testing::uniform(rng, -3.0, 3.0);
      p = p * RealPolynomial({-x, 1.0});
      if (x > 0) smallest = std::min(smallest, x);
    }
    p = p * RealPolynomial({1.0, 0.0, 1.0});  // no real roots
    const auto root = smallest_positive_root(p, 1e-13);
    if (smallest == 1e300) {
      CHECK_FALSE(root);
    } else {
      REQUIRE(root);
      CHECK(std::abs(*root - smallest) <= 1e-8);
    }
  }
}

TEST_CASE("Descartes bound counts roots in an interval") {
  const RealPolynomial p = RealPolynomial({-1.0, 1.0}) * RealPolynomial({-2.0, 1.0});
  CHECK(descartes_bound(p, 0.0, 1.5) == 1);
  CHECK(descartes_bound(p, 0.0, 3.0) == 2);
  CHECK(descartes_bound(p, 2.5, 5.0) == 0);
  CHECK(cauchy_root_bound(p) == doctest::Approx(4.0));
}

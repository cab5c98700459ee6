#include <cmath>

#include "doctest.h"
#include "minstab/errors.hpp"
#include "minstab/isotropy.hpp"
#include "random_data.hpp"

using namespace minstab;
using minstab::testing::Rng;

namespace {

constexpr Complex I{0.0, 1.0};

WEData r4_two_jet() {
  // (1, i, 0, 0) + z (0, 0, 1, i)
  return WEData({CoefficientSeries{1.0, 0.0}, CoefficientSeries{I, 0.0}, CoefficientSeries{0.0, 1.0},
                 CoefficientSeries{0.0, I}},
                {}, 8);
}

void check_structure(const WEData& d, const ComplexStructureJ& j, double tol) {
  const int dim = j.dimension();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
  CHECK((j.matrix * j.matrix + id).cwiseAbs().maxCoeff() <= tol);
  const Eigen::MatrixXd metric = j.basis.transpose() * j.basis;
  CHECK((j.matrix.transpose() * metric * j.matrix - metric).cwiseAbs().maxCoeff() <= tol);
  CHECK(dim % 2 == 0);
  const double scale = d.jet_scale();
  for (int k = 0; k <= d.n_max(); ++k) {
    Eigen::VectorXd re(d.dimension());
    Eigen::VectorXd im(d.dimension());
    for (int i = 0; i < d.dimension(); ++i) {
      re(i) = d.coefficient(i, k).real();
      im(i) = d.coefficient(i, k).imag();
    }
    CHECK((j.apply(re) + im).cwiseAbs().maxCoeff() <= 1e-9 * std::max(scale, 1.0));
  }
}

}  // namespace

TEST_CASE("gram: Enneper values") {
  const GramTable g = gram(testing::enneper(), 4);
  CHECK(std::abs(g(0, 0)) <= 1e-16);
  CHECK(std::abs(g(1, 1) - 1.0) <= 1e-16);
  CHECK(std::abs(g(0, 2) + 0.5) <= 1e-16);
  CHECK(g(2, 0) == g(0, 2));
}

TEST_CASE("gram: plane and non-isotropic constant") {
  CHECK(gram(testing::plane(), 5).max_abs() == 0.0);
  const GramTable g = gram(WEData({CoefficientSeries{1.0}, CoefficientSeries{1.0}}), 0);
  CHECK(g(0, 0) == Complex{2.0});
  CHECK_THROWS_AS(gram(testing::plane(4), 5), CapacityError);
}

TEST_CASE("gram is exactly symmetric and conformality kills anti-diagonal sums") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const WEData d = testing::random_conformal_data(rng, testing::uniform_int(rng, 3, 5), 32);
    const GramTable g = gram(d, 32);
    const double scale = d.jet_scale() * d.jet_scale();
    for (int m = 0; m <= 32; ++m)
      for (int k = 0; k <= 32; ++k) CHECK(g(m, k) == g(k, m));
    for (int s = 0; s <= 32; ++s) {
      Complex sum{};
      for (const auto& v : g.anti_diagonal(s)) sum += v;
      CHECK(std::abs(sum) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("holomorphy_check verdicts and violation order") {
  CHECK(holomorphy_check(testing::plane(), 32).isotropic());
  CHECK(holomorphy_check(r4_two_jet(), 8).isotropic());

  const HolomorphyVerdict v = holomorphy_check(testing::enneper(), 32);
  REQUIRE_FALSE(v.isotropic());
  CHECK(v.violation->m == 0);
  CHECK(v.violation->k == 2);
  CHECK(std::abs(v.violation->value + 0.5) <= 1e-15);
}

TEST_CASE("construct_J: plane") {
  const ComplexStructureJ j = construct_J(testing::plane(), 32);
  CHECK(j.dimension() == 2);
  const Eigen::VectorXd je1 = j.apply(Eigen::Vector2d(1.0, 0.0));
  const Eigen::VectorXd je2 = j.apply(Eigen::Vector2d(0.0, 1.0));
  CHECK(std::abs(je1(0)) < 1e-14);
  CHECK(je1(1) == doctest::Approx(-1.0));
  CHECK(je2(0) == doctest::Approx(1.0));
  CHECK(std::abs(je2(1)) < 1e-14);
  check_structure(testing::plane(), j, 1e-12);
  CHECK_FALSE(j.ill_conditioned);
}

TEST_CASE("construct_J: R^4 two-jet gives two rotation blocks") {
  const WEData d = r4_two_jet();
  const ComplexStructureJ j = construct_J(d, 8);
  CHECK(j.dimension() == 4);
  Eigen::MatrixXd ambient(4, 4);
  for (int c = 0; c < 4; ++c) ambient.col(c) = j.apply(Eigen::Vector4d::Unit(c));
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(4, 4);
  expected(1, 0) = -1.0;
  expected(0, 1) = 1.0;
  expected(3, 2) = -1.0;
  expected(2, 3) = 1.0;
  CHECK((ambient - expected).cwiseAbs().maxCoeff() <= 1e-12);
  check_structure(d, j, 1e-12);
}

TEST_CASE("construct_J refuses non-isotropic data") {
  CHECK_THROWS_AS(construct_J(testing::enneper(), 32), NotIsotropic);
}

TEST_CASE("construct_J on random isotropic data") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = testing::uniform_int(rng, 2, 7);
    const int rank = testing::uniform_int(rng, 1, n / 2);
    const WEData d = testing::random_isotropic_data(rng, n, rank, testing::uniform_int(rng, 0, 6), 16);
    const ComplexStructureJ j = construct_J(d, 16);
    CHECK(j.dimension() <= 2 * rank);
    check_structure(d, j, 1e-9);
  }
}

TEST_CASE("isotropy survives a twist") {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const WEData d = testing::random_isotropic_data(rng, 6, 2, 5, 20);
    const WEData t = twist(d, testing::random_series(rng, 6, 6));
    CHECK(holomorphy_check(t, 20, 1e-12).isotropic());
  }
}

TEST_CASE("ek_values: worked examples") {
  const std::vector<Complex> a{1.0, -2.0, 1.0};
  const auto e = ek_values(a, 2);
  REQUIRE(e.size() == 2);
  CHECK(e[0] == Complex{0.0});
  CHECK(e[1] == Complex{2.0});

  const std::vector<Complex> zeros(5);
  for (const auto& v : ek_values(zeros, 4)) CHECK(v == Complex{});

  const std::vector<Complex> row{-0.5, 1.0, -0.5};
  const auto en = ek_values(row, 2);
  CHECK(en[0] == Complex{0.0});
  CHECK(en[1] == Complex{-1.0});

  const std::vector<Complex> skew{1.0, 0.0, 2.0};
  CHECK_THROWS_AS(ek_values(skew, 2), InvalidInput);
  CHECK_THROWS_AS(ek_values(skew, 3), InvalidInput);
}

TEST_CASE("symmetric_vanishing_solve") {
  CHECK(symmetric_vanishing_solve(1));
  CHECK(symmetric_vanishing_solve(2));
  // N = 2 system: E_0 = 2 a_0 + a_1, E_1 = 2 a_0.
  const Eigen::MatrixXd m2 = symmetric_e_matrix(2);
  CHECK(m2(0, 0) == 2.0);
  CHECK(m2(0, 1) == 1.0);
  CHECK(m2(1, 0) == 2.0);
  CHECK(m2(1, 1) == 0.0);
  CHECK(symmetric_vanishing_solve(40));
  CHECK(symmetric_e_matrix_min_singular_value(40) > 1e-8);
  CHECK_THROWS_AS(symmetric_e_matrix(0), InvalidInput);
}

TEST_CASE("the E-matrix agrees with ek_values") {
  Rng rng(44);
  for (int n = 1; n <= 15; ++n) {
    std::vector<Complex> a(static_cast<std::size_t>(n) + 1);
    Eigen::VectorXd half(n / 2 + 1);
    for (int j = 0; j <= n / 2; ++j) {
      half(j) = testing::uniform(rng, -1.0, 1.0);
      a[static_cast<std::size_t>(j)] = half(j);
      a[static_cast<std::size_t>(n - j)] = half(j);
    }
    const Eigen::VectorXd via_matrix = symmetric_e_matrix(n) * half;
    const auto direct = ek_values(a, n);
    for (int k = 0; k <= n / 2; ++k) CHECK(std::abs(direct[static_cast<std::size_t>(k)].real() - via_matrix(k)) <= 1e-12);
  }
}

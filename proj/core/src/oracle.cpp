#include "minstab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <complex>
#include <utility>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "minstab/errors.hpp"

#ifdef MINSTAB_HAVE_QUADMATH
#include <quadmath.h>
#endif

namespace minstab {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw InvalidInput("Gauss-Legendre rule needs n >= 1");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 1; i <= half; ++i) {
    double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-16) break;
    }
    const auto lo = static_cast<std::size_t>(i - 1);
    const auto hi = static_cast<std::size_t>(n - i);
    nodes[lo] = -z;
    nodes[hi] = z;
    weights[lo] = 2.0 / ((1.0 - z * z) * pp * pp);
    weights[hi] = weights[lo];
  }
}

DiskQuadrature::DiskQuadrature(int radial, int angular) : angular_(angular) {
  if (radial < 1 || angular < 1) throw InvalidInput("quadrature sizes must be positive");
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(radial, x, w);
  const double dtheta = 2.0 * std::numbers::pi / angular;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double s = 0.5 * (x[i] + 1.0);
    radii_.push_back(s);
    weights_.push_back(0.5 * w[i] * s * dtheta);
  }
  for (int t = 0; t < angular; ++t) unit_.push_back(std::polar(1.0, t * dtheta));
}

DiskQuadrature DiskQuadrature::for_capacity(int n_max) {
  return DiskQuadrature(n_max + 2, 4 * n_max + 4);
}

int DiskQuadrature::exactness() const noexcept {
  return std::min(2 * radial_count() - 2, angular_ - 1);
}

Complex monomial_integral(int a, int b, const DiskQuadrature& quad) {
  if (a < 0 || b < 0) throw InvalidInput("monomial exponents must be >= 0");
  return quad.integrate([a, b](Complex z) { return std::pow(z, a) * std::pow(std::conj(z), b); });
}

Complex monomial_integral(int a, int b) {
  return monomial_integral(a, b, DiskQuadrature::for_capacity(std::max({a, b, 1})));
}

namespace {

// Boundary samples of phi * alpha(r .) reach r^deg while the functional can be
// many orders smaller, so the oracle works in extended precision.
#ifdef MINSTAB_HAVE_QUADMATH
using Wide = __float128;
Wide wide_cos(Wide x) { return cosq(x); }
Wide wide_sin(Wide x) { return sinq(x); }
const Wide kWidePi = 4 * atanq(1);
#else
using Wide = long double;
Wide wide_cos(Wide x) { return std::cos(x); }
Wide wide_sin(Wide x) { return std::sin(x); }
const Wide kWidePi = std::numbers::pi_v<long double>;
#endif
using WideComplex = std::complex<Wide>;

Wide wide_abs(Wide x) { return x < 0 ? -x : x; }
WideComplex widen(Complex z) { return {Wide(z.real()), Wide(z.imag())}; }
WideComplex unit(Wide angle) { return {wide_cos(angle), wide_sin(angle)}; }

struct WideDisk {
  std::vector<Wide> radii;
  std::vector<Wide> weights;
  std::vector<WideComplex> units;

  WideDisk(int radial, int angular) {
    std::vector<double> x0;
    std::vector<double> w0;
    gauss_legendre(radial, x0, w0);
    const Wide dtheta = 2 * kWidePi / angular;
    for (double guess : x0) {
      Wide z = guess;
      Wide pp = 1;
      for (int it = 0; it < 20; ++it) {
        Wide p1 = 1;
        Wide p2 = 0;
        for (int j = 1; j <= radial; ++j) {
          const Wide p3 = p2;
          p2 = p1;
          p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
        }
        pp = radial * (z * p1 - p2) / (z * z - 1);
        const Wide step = p1 / pp;
        z -= step;
        if (wide_abs(step) < Wide(1e-33)) break;
      }
      const Wide s = (z + 1) / 2;
      radii.push_back(s);
      weights.push_back(2 / ((1 - z * z) * pp * pp) / 2 * s * dtheta);
    }
    for (int t = 0; t < angular; ++t) units.push_back(unit(t * dtheta));
  }
};

// sum_p p c_p w^{p-1}
WideComplex derivative_at(const std::vector<WideComplex>& c, WideComplex w) {
  WideComplex acc{};
  for (std::size_t p = c.size() - 1; p >= 1; --p) acc = acc * w + Wide(static_cast<double>(p)) * c[p];
  return acc;
}

}  // namespace

FunctionalParts F_h_quadrature_parts(const WEData& d, const TestFunction& phi, double r) {
  const int pole = phi.pole_order();
  if (2 * pole > d.n_max()) {
    throw CapacityError("test function pole order " + std::to_string(pole) +
                        " needs n_max >= " + std::to_string(2 * pole));
  }
  if (!(r > 0.0)) throw InvalidInput("radius must be positive");

  // Boundary values phi(e^{it}) alpha_i(r e^{it}) have Fourier support in
  // [-pole, deg]; M samples resolve it without aliasing.
  const int cap = std::max(d.degree(), 1);
  const int samples = 2 * (cap + pole) + 4;
  const WideDisk quad(cap + pole + 2, 2 * (cap + pole) + 4);

  std::vector<WideComplex> roots;
  for (int l = 0; l < samples; ++l) roots.push_back(unit(2 * kWidePi * l / samples));
  std::vector<std::pair<int, WideComplex>> terms;
  for (const auto& [power, c] : phi.terms()) terms.emplace_back(power, widen(c));
  auto power_of = [&](int exponent, int l) {
    return roots[static_cast<std::size_t>(((exponent * l) % samples + samples) % samples)];
  };

  FunctionalParts total;
  std::vector<WideComplex> boundary(static_cast<std::size_t>(samples));
  for (const auto& alpha : d.alphas()) {
    std::vector<WideComplex> scaled(static_cast<std::size_t>(cap) + 1);
    Wide rj = 1;
    for (int j = 0; j <= cap; ++j, rj *= Wide(r)) scaled[static_cast<std::size_t>(j)] = widen(alpha[j]) * rj;
    for (int l = 0; l < samples; ++l) {
      WideComplex a{};
      for (int j = cap; j >= 0; --j) a = a * roots[static_cast<std::size_t>(l)] + scaled[static_cast<std::size_t>(j)];
      WideComplex f{};
      for (const auto& [power, c] : terms) f += c * power_of(power, l);
      boundary[static_cast<std::size_t>(l)] = f * a;
    }
    auto fourier = [&](int p) {
      WideComplex s{};
      for (int l = 0; l < samples; ++l) s += boundary[static_cast<std::size_t>(l)] * power_of(-p, l);
      return s / Wide(samples);
    };
    // v = sum_{p>=1} dz_p z^p + sum_{p>=1} dzbar_p conj(z)^p + const.
    std::vector<WideComplex> dz(static_cast<std::size_t>(cap) + 1);
    std::vector<WideComplex> dzbar(static_cast<std::size_t>(pole) + 1);
    for (int p = 1; p <= cap; ++p) dz[static_cast<std::size_t>(p)] = fourier(p);
    for (int p = 1; p <= pole; ++p) dzbar[static_cast<std::size_t>(p)] = fourier(-p);

    Wide cross = 0;
    Wide anti = 0;
    for (std::size_t i = 0; i < quad.radii.size(); ++i) {
      Wide ring_cross = 0;
      Wide ring_anti = 0;
      for (const auto& e : quad.units) {
        const WideComplex z = quad.radii[i] * e;
        const WideComplex vz = derivative_at(dz, z);
        const WideComplex vzbar = derivative_at(dzbar, std::conj(z));
        const WideComplex prod = vz * vzbar;
        ring_cross += prod.real();
        ring_anti += vzbar.real() * vzbar.real() + vzbar.imag() * vzbar.imag();
      }
      cross += quad.weights[i] * ring_cross;
      anti += quad.weights[i] * ring_anti;
    }
    total.cross += static_cast<double>(cross);
    total.antiholomorphic += static_cast<double>(anti);
  }
  return total;
}

double F_h_quadrature(const WEData& d, const TestFunction& phi, double r) {
  return F_h_quadrature_parts(d, phi, r).total();
}

namespace {

using SparseMatrix = Eigen::SparseMatrix<double>;

struct PolarOperator {
  SparseMatrix stiffness;  // K - diag(V) M
  Eigen::VectorXd mass;    // lumped
  double potential_max = 0.0;
};

PolarOperator assemble(const R3Rep& rep, double radius, int radial, int angular) {
  const double h = radius / radial;
  const double dtheta = 2.0 * std::numbers::pi / angular;
  const int unknowns = 1 + (radial - 1) * angular;
  auto index = [angular](int i, int t) { return 1 + (i - 1) * angular + ((t % angular) + angular) % angular; };

  const CoefficientSeries& g = rep.g();
  const CoefficientSeries dg = derivative(g);
  auto potential = [&](Complex z) {
    const double gz = std::norm(evaluate(g, z));
    const double dgz = std::norm(evaluate(dg, z));
    return 8.0 * dgz / ((1.0 + gz) * (1.0 + gz));
  };

  PolarOperator op;
  op.mass.resize(unknowns);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(unknowns);
  std::vector<Eigen::Triplet<double>> off;
  off.reserve(static_cast<std::size_t>(unknowns) * 4);
  auto edge = [&](int a, int b, double w) {
    diag(a) += w;
    if (b >= 0) {
      diag(b) += w;
      off.emplace_back(a, b, -w);
      off.emplace_back(b, a, -w);
    }
  };

  op.mass(0) = std::numbers::pi * 0.25 * h * h;
  const double v0 = potential(Complex{});
  op.potential_max = v0;
  diag(0) -= v0 * op.mass(0);
  for (int t = 0; t < angular; ++t) edge(0, index(1, t), 0.5 * dtheta);

  for (int i = 1; i < radial; ++i) {
    const double ri = i * h;
    const double outer = (i + 0.5) * h * dtheta / h;
    const double around = h / (ri * dtheta);
    for (int t = 0; t < angular; ++t) {
      const int a = index(i, t);
      op.mass(a) = ri * h * dtheta;
      const double v = potential(std::polar(ri, t * dtheta));
      op.potential_max = std::max(op.potential_max, v);
      diag(a) -= v * op.mass(a);
      edge(a, i + 1 < radial ? index(i + 1, t) : -1, outer);
      edge(a, index(i, t + 1), around);
    }
  }
  for (int a = 0; a < unknowns; ++a) off.emplace_back(a, a, diag(a));
  op.stiffness.resize(unknowns, unknowns);
  op.stiffness.setFromTriplets(off.begin(), off.end());
  return op;
}

RayleighEstimate smallest_eigenvalue(const PolarOperator& op, const RayleighOptions& options) {
  const Eigen::Index n = op.mass.size();
  // Shift below the spectrum: K >= 0 so lambda_min >= -max V.
  const double shift = -op.potential_max - 1.0;
  SparseMatrix shifted = op.stiffness;
  for (Eigen::Index a = 0; a < n; ++a) shifted.coeffRef(a, a) -= shift * op.mass(a);

  Eigen::SimplicialLDLT<SparseMatrix> solver(shifted);
  if (solver.info() != Eigen::Success) throw GridTooCoarse("Rayleigh operator factorisation failed");

  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  double lambda = 0.0;
  RayleighEstimate out;
  for (int it = 1; it <= options.max_iterations; ++it) {
    Eigen::VectorXd y = solver.solve(op.mass.cwiseProduct(x));
    y /= std::sqrt(y.dot(op.mass.cwiseProduct(y)));
    const double next = y.dot(op.stiffness * y);
    x = std::move(y);
    out.iterations = it;
    const bool done = it > 1 && std::abs(next - lambda) < options.convergence * std::max(1.0, std::abs(next));
    lambda = next;
    if (done) break;
  }
  out.eigenvalue = lambda;
  return out;
}

}  // namespace

RayleighEstimate rayleigh_r3(const R3Rep& rep, double r, const RayleighOptions& options) {
  if (!(r > 0.0)) throw InvalidInput("Rayleigh radius must be positive");
  if (options.radial < 4 || options.angular < 8) throw InvalidInput("Rayleigh grid too small");
  RayleighEstimate fine = smallest_eigenvalue(assemble(rep, r, options.radial, options.angular), options);
  fine.coarse_eigenvalue = fine.eigenvalue;
  if (options.richardson_check) {
    const RayleighEstimate coarse =
        smallest_eigenvalue(assemble(rep, r, options.radial / 2, options.angular / 2), options);
    fine.coarse_eigenvalue = coarse.eigenvalue;
    constexpr double j01 = 2.404825557695773;
    const double dirichlet = (j01 / r) * (j01 / r);
    if (std::abs(fine.eigenvalue - coarse.eigenvalue) >
        0.1 * std::max(std::abs(fine.eigenvalue), dirichlet)) {
      throw GridTooCoarse("Rayleigh estimates disagree: fine " + std::to_string(fine.eigenvalue) +
                          ", coarse " + std::to_string(coarse.eigenvalue));
    }
  }
  return fine;
}

}  // namespace minstab

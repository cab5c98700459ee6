#pragma once

#include <vector>

#include "minstab/series.hpp"
#include "minstab/test_function.hpp"
#include "minstab/we_geometry.hpp"

namespace minstab {

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Tensor rule on the unit disk: Gauss-Legendre in the radius (Jacobian s
/// folded into the weights) times the uniform trapezoid rule in the angle.
///
/// Exact for z^a conj(z)^b whenever a + b <= 2 * radial - 2 and
/// |a - b| < angular.
class DiskQuadrature {
 public:
  DiskQuadrature(int radial, int angular);

  /// radial = n_max + 2, angular = 4 n_max + 4.
  static DiskQuadrature for_capacity(int n_max);

  int radial_count() const noexcept { return static_cast<int>(radii_.size()); }
  int angular_count() const noexcept { return angular_; }

  /// Largest total degree a + b integrated exactly for every a, b.
  int exactness() const noexcept;

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(Complex{}));
    R acc{};
    for (std::size_t i = 0; i < radii_.size(); ++i) {
      R ring{};
      for (int t = 0; t < angular_; ++t) ring += f(radii_[i] * unit_[static_cast<std::size_t>(t)]);
      acc += weights_[i] * ring;
    }
    return acc;
  }

 private:
  std::vector<double> radii_;
  std::vector<double> weights_;  // includes s ds and 2 pi / angular
  std::vector<Complex> unit_;
  int angular_;
};

/// Quadrature of the integral of z^a conj(z)^b over the unit disk.
Complex monomial_integral(int a, int b, const DiskQuadrature& quad);
Complex monomial_integral(int a, int b);

/// The two integrals of the second-variation functional
///   Re int v_z v_zbar  (cross)   and   int |v_zbar|^2  (antiholomorphic).
struct FunctionalParts {
  double cross = 0.0;
  double antiholomorphic = 0.0;
  double total() const noexcept { return cross + antiholomorphic; }

  FunctionalParts& operator+=(const FunctionalParts& o) noexcept {
    cross += o.cross;
    antiholomorphic += o.antiholomorphic;
    return *this;
  }
};

/// Sum over coordinates of the functional of v_i, where v_i is the harmonic
/// extension of phi * alpha_i(r .) restricted to the unit circle.
///
/// The boundary Fourier coefficients are taken from a DFT of sampled boundary
/// values, and the differentiated extension is integrated with a
/// DiskQuadrature sized for exactness. Shares no code with the closed form.
/// Throws CapacityError when 2 * pole_order exceeds n_max.
FunctionalParts F_h_quadrature_parts(const WEData& d, const TestFunction& phi, double r);
double F_h_quadrature(const WEData& d, const TestFunction& phi, double r);

struct RayleighOptions {
  int radial = 200;
  int angular = 256;
  /// Re-solve on a half-resolution grid and compare.
  bool richardson_check = true;
  double convergence = 1e-8;
  int max_iterations = 2000;
};

struct RayleighEstimate {
  double eigenvalue = 0.0;
  double coarse_eigenvalue = 0.0;
  int iterations = 0;
};

/// Smallest eigenvalue of -Laplace - V on the disk of radius r with Dirichlet
/// boundary conditions, V = |A|^2 times the conformal factor
///   = 8 |g'|^2 / (1 + |g|^2)^2,
/// twice the spherical area density of the Gauss map. Its sign is the sign of
/// the Jacobi form of the R^3 surface; negative certifies instability on the
/// closed disk of radius r.
///
/// Discretised with the finite-volume five-point stencil on a polar grid (the
/// centre node couples to the whole first ring) and solved by shifted inverse
/// power iteration. Throws GridTooCoarse when the coarse and fine estimates
/// differ by more than 10% of max(|lambda|, lambda_D), lambda_D the pure
/// Dirichlet eigenvalue of the disk.
RayleighEstimate rayleigh_r3(const R3Rep& rep, double r, const RayleighOptions& options = {});

}  // namespace minstab

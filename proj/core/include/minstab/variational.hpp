#pragma once

#include <optional>
#include <vector>

#include "minstab/isotropy.hpp"
#include "minstab/oracle.hpp"
#include "minstab/polynomial.hpp"
#include "minstab/series.hpp"
#include "minstab/test_function.hpp"
#include "minstab/we_geometry.hpp"

namespace minstab {

/// Finite Laurent polynomial sum_{j=lo}^{hi} d_j e^{i j t} on the unit circle.
struct LaurentSeries {
  int min_index = 0;
  std::vector<Complex> coeffs;

  Complex operator[](int j) const noexcept {
    const int off = j - min_index;
    return (off >= 0 && off < static_cast<int>(coeffs.size())) ? coeffs[static_cast<std::size_t>(off)]
                                                                : Complex{};
  }
  int max_index() const noexcept { return min_index + static_cast<int>(coeffs.size()) - 1; }
};

/// Harmonic extension sum_{j>=1} u_j z^j + sum_{j>=0} w_j conj(z)^j.
/// analytic[0] is always zero; the constant term lives in antianalytic[0].
struct HarmonicCoefficients {
  std::vector<Complex> analytic;
  std::vector<Complex> antianalytic;

  Complex u(int j) const noexcept {
    return (j >= 1 && j < static_cast<int>(analytic.size())) ? analytic[static_cast<std::size_t>(j)] : Complex{};
  }
  Complex w(int j) const noexcept {
    return (j >= 0 && j < static_cast<int>(antianalytic.size())) ? antianalytic[static_cast<std::size_t>(j)]
                                                                  : Complex{};
  }
};

/// e^{ijt} -> z^j for j >= 1, e^{-ijt} -> conj(z)^j for j >= 1, constant kept.
HarmonicCoefficients poisson_coeffs(const LaurentSeries& boundary);

/// pi sum_j j Re(u_j w_j) and pi sum_j j |w_j|^2, the two integrals of the
/// functional evaluated through int_D z^a conj(z)^b = 2 pi/(a+b+2) [a = b].
FunctionalParts f_functional_parts(const HarmonicCoefficients& v);
double f_functional_closed(const HarmonicCoefficients& v);

/// Laurent coefficients of phi(e^{it}) * alpha(e^{it}).
LaurentSeries boundary_product(const CoefficientSeries& alpha, const TestFunction& phi);

/// Closed form of F_{h^r}(phi) = sum_i F(P(phi * alpha_i(r .))).
/// Throws CapacityError unless 2 * pole_order(phi) <= n_max.
FunctionalParts F_h_parts(const WEData& d, const TestFunction& phi, double r);
double F_h(const WEData& d, const TestFunction& phi, double r);

/// F_{h^r}(phi_{k,m,theta,y}) = y^2 P(r) + y Q(r) + T(r).
struct QuadraticProfile {
  int k = 1;
  int m = 1;
  double theta = 0.0;
  RealPolynomial P;
  RealPolynomial Q;
  RealPolynomial T;

  double value(double y, double r) const { return y * y * P(r) + y * Q(r) + T(r); }
  /// Q^2 - 4 P T.
  RealPolynomial discriminant() const { return Q * Q - 4.0 * (P * T); }
};

/// Collects the coefficients of y^2, y, 1 symbolically in r. Requires
/// 1 <= k <= m and 2 m <= n_max.
QuadraticProfile quadratic_profile(const WEData& d, int k, int m, double theta);

struct DestabCertificate {
  TestFunction phi;
  double r = 0.0;
  double value = 0.0;
  bool verified_by_oracle = false;
  double oracle_value = 0.0;
  /// Total degree k + m of the Gram anti-diagonal that produced phi.
  int total_degree = 0;
};

struct SearchOptions {
  int k_max = -1;         ///< <= 0: n_max / 2
  int m_max = -1;         ///< <= 0: n_max / 2
  double r_max = 0.0;     ///< <= 0: chosen from the root bound of the discriminant
  int r_grid = 400;
  double tol = kDefaultIsotropyTol;
  /// Relative agreement demanded from the quadrature re-check.
  double oracle_tol = 1e-6;
};

/// Walks total degree N = k + m upward. At the first N whose Gram
/// anti-diagonal is nonzero it takes the first k >= 1 with E_k^N != 0, sets
/// theta = -arg E_k^N, finds r with Q^2 - 4PT > 0 and minimises over y. The
/// case k = m uses the one-term function gamma z^{-m}. Every certificate is
/// re-evaluated by quadrature. Returns nullopt when every anti-diagonal within
/// the bounds vanishes.
std::optional<DestabCertificate> destab_search(const WEData& d, const SearchOptions& options = {});

/// sum_i sum_{j<m} (m-j) (Re(gamma^2 c_j c_{2m-j}) r^{2m} + |gamma c_j|^2 r^{2j}),
/// equal to F_h(gamma z^{-m}) / pi. Throws CapacityError unless 2m <= n_max.
double c_criterion(const WEData& d, Complex gamma, int m, double r);

struct RadiusResult {
  double r0 = 0.0;
  /// P_m(r) = -m |b_k a_m|^2 r^{2m} + sum_{j<m} (m-j) |b_{k+j}|^2 (1+|a_0|^2)^2 r^{2j}
  RealPolynomial poly;
  /// (1 + |g(0)|^2) / |g'(0)| when m = 1.
  std::optional<double> fast_path;
  /// gamma with gamma^2 = conj(b_k^2 a_m^2) / |b_k^2 a_m^2| (principal root).
  Complex gamma;
  int k = 0;
  int m = 0;
};

/// Destabilisation radius bound for an R^3 surface. Throws InvalidInput when g
/// is constant.
RadiusResult radius_r3(const R3Rep& rep);

}  // namespace minstab

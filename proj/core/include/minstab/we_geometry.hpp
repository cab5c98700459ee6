#pragma once

#include <optional>
#include <span>
#include <vector>

#include "minstab/series.hpp"

namespace minstab {

/// Weierstrass-Enneper data (alpha_1, ..., alpha_n) with alpha_i = dh_i/dz,
/// plus the base point h(0).
///
/// All coordinates share one truncation degree n_max. The data is not
/// required to be conformal; its conformality residual is computed once at
/// construction so callers can reject non-minimal input.
class WEData {
 public:
  /// Throws InvalidInput for n < 2, an all-zero tuple, or a base point of the
  /// wrong length. Series are brought to a common cap (the largest given cap
  /// unless `n_max` is supplied, in which case CapacityError is raised for
  /// any coefficient above it).
  WEData(std::vector<CoefficientSeries> alphas, std::vector<double> base_point = {},
         std::optional<int> n_max = std::nullopt);

  int dimension() const noexcept { return static_cast<int>(alphas_.size()); }
  int n_max() const noexcept { return n_max_; }

  const CoefficientSeries& alpha(int i) const { return alphas_.at(static_cast<std::size_t>(i)); }
  std::span<const CoefficientSeries> alphas() const noexcept { return alphas_; }
  std::span<const double> base_point() const noexcept { return base_; }

  /// Taylor coefficient c_j^i.
  Complex coefficient(int i, int j) const { return alpha(i)[j]; }

  /// The jet vector c_j = (c_j^1, ..., c_j^n).
  std::vector<Complex> jet(int j) const;

  /// Largest degree over all coordinates.
  int degree() const noexcept;

  /// max_j |c_j| with |.| the Hermitian norm on C^n.
  double jet_scale() const noexcept;

  double conformality_residual() const noexcept { return residual_; }

  /// Every coefficient multiplied by `factor` (base point kept).
  WEData scaled(Complex factor) const;

 private:
  std::vector<CoefficientSeries> alphas_;
  std::vector<double> base_;
  int n_max_ = 0;
  double residual_ = 0.0;
};

/// The R^3 representation (f, g). k is the order of f at 0; m is the lowest
/// positive index with a_m != 0, absent when g is constant.
class R3Rep {
 public:
  /// Throws InvalidInput when f vanishes identically.
  R3Rep(CoefficientSeries f, CoefficientSeries g);

  const CoefficientSeries& f() const noexcept { return f_; }
  const CoefficientSeries& g() const noexcept { return g_; }
  int k() const noexcept { return k_; }
  std::optional<int> m() const noexcept { return m_; }

 private:
  CoefficientSeries f_;
  CoefficientSeries g_;
  int k_ = 0;
  std::optional<int> m_;
};

/// (f(1-g^2)/2, i f(1+g^2)/2, f g). Throws CapacityError when
/// deg f + 2 deg g exceeds n_max.
WEData from_r3(const R3Rep& rep, int n_max = kDefaultNMax);

/// max_{j <= n_max} |[z^j] sum_i alpha_i^2| / (max_{i,j} |c_j^i|)^2.
double conformality_residual(std::span<const CoefficientSeries> alphas, int n_max);
double conformality_residual(const WEData& d);

/// h_i(z) = base_i + 2 Re sum_j c_j^i z^{j+1}/(j+1).
///
/// The factor 2 comes from alpha_i = dh_i/dz for real h_i, so that
/// dh_i = 2 Re(alpha_i dz). Every verdict in this library is invariant under
/// this global scaling.
std::vector<double> surface_point(const WEData& d, Complex z);

/// The evaluated tuple (alpha_1(z), ..., alpha_n(z)) as a point of CP^{n-1}
/// in canonical form: unit Hermitian norm, first nonzero entry real positive.
/// Throws DegenerateGaussMap if every coordinate vanishes at z.
std::vector<Complex> gauss_map(const WEData& d, Complex z);

/// True when the sine of the angle between the complex lines spanned by u and
/// v is at most tol.
bool projectively_equal(std::span<const Complex> u, std::span<const Complex> v, double tol);

/// (f alpha_1, ..., f alpha_n) with the same base point. Throws InvalidInput
/// for f = 0 and CapacityError when a product exceeds n_max.
WEData twist(const WEData& d, const CoefficientSeries& f);

/// Leading coefficient A_2 of the spherical area of the Gauss map on the disk
/// of radius s: 4 pi |g'(0)|^2 / (1 + |g(0)|^2)^2.
double spherical_area_coefficient(const R3Rep& rep);

}  // namespace minstab

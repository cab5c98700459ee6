#include "minstab/we_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "minstab/errors.hpp"

namespace minstab {

WEData::WEData(std::vector<CoefficientSeries> alphas, std::vector<double> base_point,
               std::optional<int> n_max) {
  if (alphas.size() < 2) throw InvalidInput("WE data needs n >= 2 coordinates");
  int cap = 0;
  for (const auto& a : alphas) cap = std::max(cap, a.degree_cap());
  if (n_max) cap = *n_max;
  if (cap < 0) throw InvalidInput("n_max must be >= 0");

  bool any_nonzero = false;
  alphas_.reserve(alphas.size());
  for (const auto& a : alphas) {
    if (a.degree() > cap) {
      throw CapacityError("coordinate of degree " + std::to_string(a.degree()) +
                          " exceeds n_max = " + std::to_string(cap));
    }
    alphas_.push_back(a.with_cap(cap));
    any_nonzero = any_nonzero || !a.is_zero();
  }
  if (!any_nonzero) throw InvalidInput("WE data must have a nonzero coordinate");

  if (base_point.empty()) base_point.assign(alphas_.size(), 0.0);
  if (base_point.size() != alphas_.size()) {
    throw InvalidInput("base point has " + std::to_string(base_point.size()) +
                       " entries, expected " + std::to_string(alphas_.size()));
  }
  base_ = std::move(base_point);
  n_max_ = cap;
  residual_ = minstab::conformality_residual(alphas_, n_max_);
}

std::vector<Complex> WEData::jet(int j) const {
  std::vector<Complex> out;
  out.reserve(alphas_.size());
  for (const auto& a : alphas_) out.push_back(a[j]);
  return out;
}

int WEData::degree() const noexcept {
  int d = -1;
  for (const auto& a : alphas_) d = std::max(d, a.degree());
  return d;
}

double WEData::jet_scale() const noexcept {
  double m = 0.0;
  for (int j = 0; j <= n_max_; ++j) {
    double s = 0.0;
    for (const auto& a : alphas_) s += std::norm(a[j]);
    m = std::max(m, std::sqrt(s));
  }
  return m;
}

WEData WEData::scaled(Complex factor) const {
  std::vector<CoefficientSeries> out;
  for (const auto& a : alphas_) out.push_back(a.scaled(factor));
  return WEData(std::move(out), base_, n_max_);
}

R3Rep::R3Rep(CoefficientSeries f, CoefficientSeries g) : f_(std::move(f)), g_(std::move(g)) {
  if (f_.is_zero()) throw InvalidInput("f must not vanish identically");
  k_ = f_.order();
  for (int j = 1; j <= g_.degree_cap(); ++j) {
    if (g_[j] != Complex{}) {
      m_ = j;
      break;
    }
  }
}

WEData from_r3(const R3Rep& rep, int n_max) {
  const int df = rep.f().degree();
  const int dg = std::max(rep.g().degree(), 0);
  if (df + 2 * dg > n_max) {
    throw CapacityError("deg f + 2 deg g = " + std::to_string(df + 2 * dg) +
                        " exceeds n_max = " + std::to_string(n_max));
  }
  const CoefficientSeries& f = rep.f();
  const CoefficientSeries g2 = multiply(rep.g(), rep.g(), n_max);
  const CoefficientSeries fg2 = multiply(f, g2, n_max);
  const CoefficientSeries fg = multiply(f, rep.g(), n_max);

  std::vector<Complex> a1(static_cast<std::size_t>(n_max) + 1);
  std::vector<Complex> a2(a1.size());
  std::vector<Complex> a3(a1.size());
  const Complex half_i{0.0, 0.5};
  for (int j = 0; j <= n_max; ++j) {
    const auto u = static_cast<std::size_t>(j);
    a1[u] = 0.5 * (f[j] - fg2[j]);
    a2[u] = half_i * (f[j] + fg2[j]);
    a3[u] = fg[j];
  }
  return WEData({CoefficientSeries(std::move(a1), n_max), CoefficientSeries(std::move(a2), n_max),
                 CoefficientSeries(std::move(a3), n_max)},
                {}, n_max);
}

double conformality_residual(std::span<const CoefficientSeries> alphas, int n_max) {
  double scale = 0.0;
  for (const auto& a : alphas) scale = std::max(scale, a.max_abs());
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int j = 0; j <= n_max; ++j) {
    Complex s{};
    for (const auto& a : alphas) {
      for (int p = 0; p <= j; ++p) s += a[p] * a[j - p];
    }
    worst = std::max(worst, std::abs(s));
  }
  return worst / (scale * scale);
}

double conformality_residual(const WEData& d) {
  return conformality_residual(d.alphas(), d.n_max());
}

std::vector<double> surface_point(const WEData& d, Complex z) {
  std::vector<double> out(d.base_point().begin(), d.base_point().end());
  for (int i = 0; i < d.dimension(); ++i) {
    const CoefficientSeries& a = d.alpha(i);
    // Horner on sum_j c_j z^{j+1}/(j+1).
    Complex acc{};
    for (int j = a.degree(); j >= 0; --j) acc = acc * z + a[j] / static_cast<double>(j + 1);
    out[static_cast<std::size_t>(i)] += 2.0 * std::real(acc * z);
  }
  return out;
}

std::vector<Complex> gauss_map(const WEData& d, Complex z) {
  std::vector<Complex> v;
  v.reserve(static_cast<std::size_t>(d.dimension()));
  double norm2 = 0.0;
  for (const auto& a : d.alphas()) {
    v.push_back(evaluate(a, z));
    norm2 += std::norm(v.back());
  }
  if (norm2 == 0.0 || std::sqrt(norm2) <= 1e-14 * d.jet_scale()) {
    throw DegenerateGaussMap("all coordinates of the data vanish at the evaluation point");
  }
  const double norm = std::sqrt(norm2);
  std::size_t lead = 0;
  while (lead < v.size() && std::abs(v[lead]) <= 1e-12 * norm) ++lead;
  const Complex phase = std::conj(v[lead]) / std::abs(v[lead]);
  for (auto& c : v) c *= phase / norm;
  return v;
}

bool projectively_equal(std::span<const Complex> u, std::span<const Complex> v, double tol) {
  if (u.size() != v.size()) return false;
  double nu = 0.0;
  double nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    nu += std::norm(u[i]);
    nv += std::norm(v[i]);
  }
  if (nu == 0.0 || nv == 0.0) return false;
  // Sine of the angle between the lines from the Pluecker coordinates
  // u_i v_j - u_j v_i; avoids the cancellation in 1 - |<u,v>|^2.
  double s2 = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) s2 += std::norm(u[i] * v[j] - u[j] * v[i]);
  }
  return std::sqrt(s2 / (nu * nv)) <= tol;
}

WEData twist(const WEData& d, const CoefficientSeries& f) {
  if (f.is_zero()) throw InvalidInput("twist function must not vanish identically");
  const int cap = d.n_max();
  std::vector<CoefficientSeries> out;
  out.reserve(static_cast<std::size_t>(d.dimension()));
  for (const auto& a : d.alphas()) {
    if (!a.is_zero() && a.degree() + f.degree() > cap) {
      throw CapacityError("twisted coordinate of degree " + std::to_string(a.degree() + f.degree()) +
                          " exceeds n_max = " + std::to_string(cap));
    }
    out.push_back(multiply(a, f, cap));
  }
  return WEData(std::move(out), std::vector<double>(d.base_point().begin(), d.base_point().end()),
                cap);
}

double spherical_area_coefficient(const R3Rep& rep) {
  const double a0 = std::norm(rep.g()[0]);
  const double a1 = std::norm(rep.g()[1]);
  return 4.0 * std::numbers::pi * a1 / ((1.0 + a0) * (1.0 + a0));
}

}  // namespace minstab

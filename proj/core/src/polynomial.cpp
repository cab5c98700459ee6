#include "minstab/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "minstab/errors.hpp"

namespace minstab {

void RealPolynomial::accumulate(int power, double value) {
  if (power < 0) throw InvalidInput("negative polynomial power");
  if (power >= static_cast<int>(coeffs_.size())) coeffs_.resize(static_cast<std::size_t>(power) + 1);
  coeffs_[static_cast<std::size_t>(power)] += value;
}

int RealPolynomial::degree() const noexcept {
  for (int j = static_cast<int>(coeffs_.size()) - 1; j >= 0; --j) {
    if (coeffs_[static_cast<std::size_t>(j)] != 0.0) return j;
  }
  return -1;
}

double RealPolynomial::operator()(double r) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
  return acc;
}

RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b) {
  std::vector<double> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = a[static_cast<int>(j)] + b[static_cast<int>(j)];
  return RealPolynomial(std::move(out));
}

RealPolynomial operator-(const RealPolynomial& a, const RealPolynomial& b) {
  return a + (-1.0) * b;
}

RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RealPolynomial(std::move(out));
}

RealPolynomial operator*(double s, const RealPolynomial& a) {
  std::vector<double> out(a.coeffs_);
  for (auto& c : out) c *= s;
  return RealPolynomial(std::move(out));
}

double cauchy_root_bound(const RealPolynomial& p) {
  const int n = p.degree();
  if (n <= 0) return 0.0;
  const double lead = std::abs(p[n]);
  double m = 0.0;
  for (int j = 0; j < n; ++j) m = std::max(m, std::abs(p[j]) / lead);
  return 1.0 + m;
}

namespace {

// Coefficients of p(x + a).
std::vector<double> taylor_shift(std::vector<double> c, double a) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 2; ; --j) {
      c[j] += a * c[j + 1];
      if (j == i) break;
    }
  }
  return c;
}

int sign_variations(const std::vector<double>& c) {
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  const double eps = scale * 1e-15;
  int count = 0;
  int last = 0;
  for (double v : c) {
    if (std::abs(v) <= eps) continue;
    const int s = v > 0 ? 1 : -1;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Strips zero roots at r = 0.
RealPolynomial deflate_origin(const RealPolynomial& p) {
  int low = 0;
  while (low <= p.degree() && p[low] == 0.0) ++low;
  std::vector<double> c;
  for (int j = low; j <= p.degree(); ++j) c.push_back(p[j]);
  return RealPolynomial(std::move(c));
}

double bisect(const RealPolynomial& p, double lo, double hi, double tol) {
  double flo = p(lo);
  for (int it = 0; it < 400 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = p(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<double> isolate(const RealPolynomial& p, double a, double b, double tol, int depth) {
  const int v = descartes_bound(p, a, b);
  if (v == 0) return std::nullopt;
  const double fa = p(a);
  const double fb = p(b);
  if (v == 1 && fa != 0.0 && fb != 0.0 && (fa > 0) != (fb > 0)) return bisect(p, a, b, tol);
  if (b - a <= tol || depth > 200) {
    // Even-multiplicity cluster: accept only if p nearly vanishes here.
    const double mid = 0.5 * (a + b);
    double scale = 0.0;
    for (int j = 0; j <= p.degree(); ++j) scale += std::abs(p[j]) * std::pow(std::abs(mid), j);
    if (std::abs(p(mid)) <= 1e-9 * scale) return mid;
    return std::nullopt;
  }
  const double mid = 0.5 * (a + b);
  if (auto left = isolate(p, a, mid, tol, depth + 1)) return left;
  if (p(mid) == 0.0) return mid;
  return isolate(p, mid, b, tol, depth + 1);
}

}  // namespace

int descartes_bound(const RealPolynomial& p, double a, double b) {
  const int n = p.degree();
  if (n <= 0) return 0;
  std::vector<double> c(p.coeffs().begin(), p.coeffs().begin() + n + 1);
  c = taylor_shift(std::move(c), a);
  double s = 1.0;
  for (auto& v : c) {
    v *= s;
    s *= (b - a);
  }
  std::reverse(c.begin(), c.end());
  c = taylor_shift(std::move(c), 1.0);
  return sign_variations(c);
}

std::optional<double> smallest_positive_root(const RealPolynomial& p, double tol) {
  if (p.is_zero()) throw InvalidInput("smallest_positive_root of the zero polynomial");
  const RealPolynomial q = deflate_origin(p);
  if (q.degree() <= 0) return std::nullopt;
  const double bound = cauchy_root_bound(q);
  return isolate(q, 0.0, bound, tol, 0);
}

}  // namespace minstab

#include "minstab/variational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "minstab/errors.hpp"

namespace minstab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_capacity(const WEData& d, int pole) {
  if (2 * pole > d.n_max()) {
    throw CapacityError("pole order " + std::to_string(pole) + " needs n_max >= " +
                        std::to_string(2 * pole) + ", have " + std::to_string(d.n_max()));
  }
}

}  // namespace

HarmonicCoefficients poisson_coeffs(const LaurentSeries& boundary) {
  HarmonicCoefficients v;
  const int top = std::max(boundary.max_index(), 0);
  const int bottom = std::max(-boundary.min_index, 0);
  v.analytic.assign(static_cast<std::size_t>(top) + 1, Complex{});
  v.antianalytic.assign(static_cast<std::size_t>(bottom) + 1, Complex{});
  for (int j = 1; j <= top; ++j) v.analytic[static_cast<std::size_t>(j)] = boundary[j];
  for (int j = 0; j <= bottom; ++j) v.antianalytic[static_cast<std::size_t>(j)] = boundary[-j];
  return v;
}

FunctionalParts f_functional_parts(const HarmonicCoefficients& v) {
  FunctionalParts parts;
  const int top = static_cast<int>(v.antianalytic.size()) - 1;
  for (int j = 1; j <= top; ++j) {
    const Complex w = v.w(j);
    parts.cross += j * std::real(v.u(j) * w);
    parts.antiholomorphic += j * std::norm(w);
  }
  parts.cross *= kPi;
  parts.antiholomorphic *= kPi;
  return parts;
}

double f_functional_closed(const HarmonicCoefficients& v) { return f_functional_parts(v).total(); }

LaurentSeries boundary_product(const CoefficientSeries& alpha, const TestFunction& phi) {
  LaurentSeries out;
  out.min_index = -phi.pole_order();
  const int hi = alpha.degree_cap();
  out.coeffs.assign(static_cast<std::size_t>(hi - out.min_index) + 1, Complex{});
  for (const auto& [power, c] : phi.terms()) {
    for (int j = 0; j <= hi; ++j) {
      out.coeffs[static_cast<std::size_t>(j + power - out.min_index)] += c * alpha[j];
    }
  }
  return out;
}

FunctionalParts F_h_parts(const WEData& d, const TestFunction& phi, double r) {
  require_capacity(d, phi.pole_order());
  FunctionalParts total;
  for (const auto& alpha : d.alphas()) {
    total += f_functional_parts(poisson_coeffs(boundary_product(rescale_lemma(alpha, r), phi)));
  }
  return total;
}

double F_h(const WEData& d, const TestFunction& phi, double r) { return F_h_parts(d, phi, r).total(); }

QuadraticProfile quadratic_profile(const WEData& d, int k, int m, double theta) {
  if (k < 1 || k > m) throw InvalidInput("quadratic profile needs 1 <= k <= m");
  require_capacity(d, m);
  QuadraticProfile prof{k, m, theta, {}, {}, {}};
  const Complex e = std::polar(1.0, theta);
  const Complex e2 = e * e;
  // On the circle, phi * alpha(r .) has coefficients
  //   d_p = c_{p+k} r^{p+k} + y e c_{p+m} r^{p+m};
  // u_p = d_p and w_p = d_{-p} feed pi sum_p p (Re(u_p w_p) + |w_p|^2).
  for (const auto& alpha : d.alphas()) {
    auto c = [&alpha](int j) { return alpha[j]; };
    for (int p = 1; p <= m; ++p) {
      if (p <= k) {
        prof.T.accumulate(2 * k, p * std::real(c(p + k) * c(k - p)));
        prof.T.accumulate(2 * (k - p), p * std::norm(c(k - p)));
        prof.Q.accumulate(k + m - 2 * p, 2.0 * p * std::real(e * std::conj(c(k - p)) * c(m - p)));
      }
      prof.Q.accumulate(k + m, p * std::real(e * (c(p + k) * c(m - p) + c(p + m) * c(k - p))));
      prof.P.accumulate(2 * m, p * std::real(e2 * c(p + m) * c(m - p)));
      prof.P.accumulate(2 * (m - p), p * std::norm(c(m - p)));
    }
  }
  prof.P = kPi * prof.P;
  prof.Q = kPi * prof.Q;
  prof.T = kPi * prof.T;
  return prof;
}

double c_criterion(const WEData& d, Complex gamma, int m, double r) {
  if (m < 1) throw InvalidInput("criterion exponent must be >= 1");
  require_capacity(d, m);
  const Complex g2 = gamma * gamma;
  const double r2m = std::pow(r, 2 * m);
  double total = 0.0;
  for (const auto& alpha : d.alphas()) {
    for (int j = 0; j < m; ++j) {
      total += (m - j) * (std::real(g2 * alpha[j] * alpha[2 * m - j]) * r2m +
                          std::norm(gamma * alpha[j]) * std::pow(r, 2 * j));
    }
  }
  return total;
}

namespace {

struct Candidate {
  double y = 0.0;
  double value = 0.0;
};

// Minimises y^2 P + y Q + T over y at a fixed r.
Candidate best_y(const QuadraticProfile& prof, double r) {
  const double p = prof.P(r);
  const double q = prof.Q(r);
  const double t = prof.T(r);
  Candidate c;
  if (p > 0.0) {
    c.y = -q / (2.0 * p);
  } else if (p < 0.0) {
    const double big = (std::abs(q) + std::sqrt(q * q + 4.0 * std::abs(p) * std::abs(t))) / std::abs(p) + 1.0;
    c.y = q > 0.0 ? -big : big;
  } else if (q != 0.0) {
    c.y = -(t + 1.0) / q;
  }
  c.value = prof.value(c.y, r);
  return c;
}

double bisect_sign_change(const RealPolynomial& p, double lo, double hi) {
  double flo = p(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = p(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return hi;
}

constexpr double kMargin = 0.01;

std::optional<DestabCertificate> one_term_certificate(const WEData& d, int m, Complex s,
                                                      double threshold, double r_max) {
  // With |gamma| = 1 and gamma^2 = -conj(S)/|S|:
  //   F_h / pi = R(r) - |S| r^{2m},  R(r) = sum_{j<m} (m-j) |c_j|^2 r^{2j}.
  const Complex gamma = std::sqrt(-std::conj(s) / std::abs(s));
  RealPolynomial poly;
  poly.accumulate(2 * m, -std::abs(s));
  for (int j = 0; j < m; ++j) {
    double norm2 = 0.0;
    for (const auto& alpha : d.alphas()) norm2 += std::norm(alpha[j]);
    poly.accumulate(2 * j, (m - j) * norm2);
  }
  const TestFunction phi = TestFunction::single(m, gamma);
  double r = smallest_positive_root(poly).value_or(1.0) * (1.0 + kMargin);
  for (int step = 0; step < 400; ++step, r *= 1.1) {
    if (r_max > 0.0 && r > r_max) return std::nullopt;
    const double value = F_h(d, phi, r);
    if (value < -threshold) return DestabCertificate{phi, r, value, false, 0.0, 2 * m};
  }
  return std::nullopt;
}

std::optional<DestabCertificate> two_term_certificate(const WEData& d, int k, int m, double theta,
                                                      double threshold, const SearchOptions& options) {
  const QuadraticProfile prof = quadratic_profile(d, k, m, theta);
  const RealPolynomial disc = prof.discriminant();
  const double r_hi = options.r_max > 0.0 ? options.r_max : 2.0 * std::max(1.0, cauchy_root_bound(disc));
  const int n = std::max(options.r_grid, 2);

  // Geometric grid over [r_hi * 1e-6, r_hi] so the first admissible radius is
  // located on small scales as well as large ones.
  const double ratio = std::pow(1e-6, 1.0 / n);
  double prev_r = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double ri = r_hi * std::pow(ratio, n - i);
    const Candidate at = best_y(prof, ri);
    if (!(at.value < -threshold)) {
      prev_r = ri;
      continue;
    }
    double r = ri;
    Candidate chosen = at;
    if (prev_r > 0.0 && disc(prev_r) <= 0.0 && disc(ri) > 0.0) {
      const double crossing = bisect_sign_change(disc, prev_r, ri);
      const double near = std::min(ri, crossing * (1.0 + kMargin));
      const Candidate c = best_y(prof, near);
      if (c.value < -threshold) {
        r = near;
        chosen = c;
      }
    }
    const TestFunction phi = TestFunction::two_term(k, m, theta, chosen.y);
    const double value = F_h(d, phi, r);
    if (value < -threshold) return DestabCertificate{phi, r, value, false, 0.0, k + m};
    prev_r = ri;
  }
  return std::nullopt;
}

}  // namespace

std::optional<DestabCertificate> destab_search(const WEData& d, const SearchOptions& options) {
  const int n_max = d.n_max();
  const int k_max = options.k_max > 0 ? options.k_max : n_max / 2;
  const int m_max = options.m_max > 0 ? options.m_max : n_max / 2;
  const int top = std::min(k_max + m_max, n_max);
  if (top < 1) return std::nullopt;

  const GramTable g = gram(d, top);
  const double scale = d.jet_scale() * d.jet_scale();
  const double threshold = options.tol * scale;

  for (int total = 1; total <= top; ++total) {
    const std::vector<Complex> a = g.anti_diagonal(total);
    double worst = 0.0;
    for (const auto& v : a) worst = std::max(worst, std::abs(v));
    if (worst <= threshold) continue;

    // Every admissible k at this degree yields a candidate; the smallest
    // radius is tried first since it keeps the oracle's dynamic range low.
    const std::vector<Complex> e = ek_values(a, total);
    std::vector<DestabCertificate> found;
    for (int k = 1; k <= total / 2; ++k) {
      const int m = total - k;
      if (k > k_max || m > m_max || 2 * m > n_max) continue;
      const Complex ek = e[static_cast<std::size_t>(k)];
      if (std::abs(ek) <= threshold) continue;

      std::optional<DestabCertificate> cert =
          k == m ? one_term_certificate(d, m, 0.5 * ek, threshold, options.r_max)
                 : two_term_certificate(d, k, m, -std::arg(ek), threshold, options);
      if (cert) found.push_back(*cert);
    }
    if (found.empty()) continue;
    std::stable_sort(found.begin(), found.end(),
                     [](const DestabCertificate& x, const DestabCertificate& y) { return x.r < y.r; });
    for (auto& cert : found) {
      cert.oracle_value = F_h_quadrature(d, cert.phi, cert.r);
      cert.verified_by_oracle = cert.oracle_value < 0.0 &&
                                std::abs(cert.oracle_value - cert.value) <= options.oracle_tol * std::abs(cert.value);
      if (cert.verified_by_oracle) return cert;
    }
    return found.front();
  }
  return std::nullopt;
}

RadiusResult radius_r3(const R3Rep& rep) {
  if (!rep.m()) throw InvalidInput("g is constant: no index m > 0 with a_m != 0");
  RadiusResult out;
  out.k = rep.k();
  out.m = *rep.m();
  const Complex bk = rep.f()[out.k];
  const Complex am = rep.g()[out.m];
  const double a0 = std::norm(rep.g()[0]);
  const double lift = (1.0 + a0) * (1.0 + a0);

  out.poly.accumulate(2 * out.m, -out.m * std::norm(bk * am));
  for (int j = 0; j < out.m; ++j) {
    out.poly.accumulate(2 * j, (out.m - j) * std::norm(rep.f()[out.k + j]) * lift);
  }
  const auto root = smallest_positive_root(out.poly);
  if (!root) throw InvalidInput("radius polynomial has no positive root");
  out.r0 = *root;
  if (out.m == 1) out.fast_path = (1.0 + a0) / std::abs(rep.g()[1]);

  const Complex target = bk * bk * am * am;
  out.gamma = std::sqrt(std::conj(target) / std::abs(target));
  return out;
}

}  // namespace minstab

#include "minstab/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "minstab/errors.hpp"

namespace minstab {

CoefficientSeries::CoefficientSeries(int degree_cap)
    : coeffs_(static_cast<std::size_t>(std::max(degree_cap, 0)) + 1, Complex{}),
      cap_(std::max(degree_cap, 0)) {
  if (degree_cap < 0) throw InvalidInput("degree_cap must be >= 0");
}

CoefficientSeries::CoefficientSeries(std::vector<Complex> coeffs, int degree_cap)
    : CoefficientSeries(degree_cap) {
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (static_cast<int>(j) <= cap_) {
      coeffs_[j] = coeffs[j];
    } else if (coeffs[j] != Complex{}) {
      throw CapacityError("coefficient of degree " + std::to_string(j) +
                          " exceeds truncation degree " + std::to_string(cap_));
    }
  }
}

CoefficientSeries::CoefficientSeries(std::initializer_list<Complex> coeffs)
    : CoefficientSeries(std::vector<Complex>(coeffs),
                        std::max(static_cast<int>(coeffs.size()) - 1, 0)) {}

CoefficientSeries CoefficientSeries::from_vector(std::vector<Complex> coeffs) {
  const int cap = std::max(static_cast<int>(coeffs.size()) - 1, 0);
  return CoefficientSeries(std::move(coeffs), cap);
}

int CoefficientSeries::degree() const noexcept {
  for (int j = cap_; j >= 0; --j) {
    if (coeffs_[static_cast<std::size_t>(j)] != Complex{}) return j;
  }
  return -1;
}

int CoefficientSeries::order() const noexcept {
  for (int j = 0; j <= cap_; ++j) {
    if (coeffs_[static_cast<std::size_t>(j)] != Complex{}) return j;
  }
  return -1;
}

double CoefficientSeries::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

CoefficientSeries CoefficientSeries::with_cap(int degree_cap) const {
  return CoefficientSeries(coeffs_, degree_cap);
}

CoefficientSeries CoefficientSeries::scaled(Complex factor) const {
  CoefficientSeries out(*this);
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

CoefficientSeries multiply(const CoefficientSeries& a, const CoefficientSeries& b, int cap) {
  std::vector<Complex> out(static_cast<std::size_t>(std::max(cap, 0)) + 1, Complex{});
  const int da = a.degree();
  const int db = b.degree();
  if (da >= 0 && db >= 0) {
    for (int p = 0; p <= da; ++p) {
      const Complex ap = a[p];
      if (ap == Complex{}) continue;
      for (int q = 0; q <= db && p + q <= cap; ++q) {
        out[static_cast<std::size_t>(p + q)] += ap * b[q];
      }
    }
  }
  return CoefficientSeries(std::move(out), cap);
}

CoefficientSeries add(const CoefficientSeries& a, const CoefficientSeries& b) {
  const int cap = std::max(a.degree_cap(), b.degree_cap());
  std::vector<Complex> out(static_cast<std::size_t>(cap) + 1);
  for (int j = 0; j <= cap; ++j) out[static_cast<std::size_t>(j)] = a[j] + b[j];
  return CoefficientSeries(std::move(out), cap);
}

Complex evaluate(const CoefficientSeries& s, Complex z) noexcept {
  Complex acc{};
  for (int j = s.degree(); j >= 0; --j) acc = acc * z + s[j];
  return acc;
}

CoefficientSeries derivative(const CoefficientSeries& s) {
  std::vector<Complex> out(static_cast<std::size_t>(s.degree_cap()) + 1);
  for (int j = 1; j <= s.degree_cap(); ++j) {
    out[static_cast<std::size_t>(j - 1)] = static_cast<double>(j) * s[j];
  }
  return CoefficientSeries(std::move(out), s.degree_cap());
}

CoefficientSeries antiderivative(const CoefficientSeries& s) {
  const int cap = s.degree_cap() + 1;
  std::vector<Complex> out(static_cast<std::size_t>(cap) + 1);
  for (int j = 0; j < cap; ++j) {
    out[static_cast<std::size_t>(j + 1)] = s[j] / static_cast<double>(j + 1);
  }
  return CoefficientSeries(std::move(out), cap);
}

CoefficientSeries rescale_lemma(const CoefficientSeries& s, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidInput("rescale radius must be positive");
  std::vector<Complex> out(static_cast<std::size_t>(s.degree_cap()) + 1);
  double power = 1.0;
  for (int j = 0; j <= s.degree_cap(); ++j) {
    out[static_cast<std::size_t>(j)] = s[j] * power;
    power *= r;
  }
  return CoefficientSeries(std::move(out), s.degree_cap());
}

}  // namespace minstab

#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace minstab {

using Complex = std::complex<double>;

/// Default truncation degree for every series in a computation.
inline constexpr int kDefaultNMax = 32;

/// A truncated complex power series sum_{j=0}^{cap} c_j z^j.
///
/// The truncation degree is explicit and never grows behind the caller's back.
/// Indexing outside [0, degree_cap] yields zero, so formulas that reach for
/// c_{-1} or c_{cap+1} read a zero coefficient instead of failing.
class CoefficientSeries {
 public:
  CoefficientSeries() : coeffs_(1, Complex{}) {}

  /// Zero series with the given truncation degree.
  explicit CoefficientSeries(int degree_cap);

  /// Throws CapacityError if a nonzero coefficient sits above degree_cap.
  CoefficientSeries(std::vector<Complex> coeffs, int degree_cap);

  /// Series whose cap is the length of the list minus one.
  CoefficientSeries(std::initializer_list<Complex> coeffs);

  static CoefficientSeries from_vector(std::vector<Complex> coeffs);

  Complex operator[](int j) const noexcept {
    return (j >= 0 && j <= cap_) ? coeffs_[static_cast<std::size_t>(j)] : Complex{};
  }

  int degree_cap() const noexcept { return cap_; }

  /// Highest index with a nonzero coefficient, or -1 for the zero series.
  int degree() const noexcept;

  /// Lowest index with a nonzero coefficient, or -1 for the zero series.
  int order() const noexcept;

  bool is_zero() const noexcept { return degree() < 0; }

  double max_abs() const noexcept;

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// Same coefficients under a different cap. Throws CapacityError when
  /// shrinking would drop a nonzero coefficient.
  CoefficientSeries with_cap(int degree_cap) const;

  CoefficientSeries scaled(Complex factor) const;

  friend bool operator==(const CoefficientSeries&, const CoefficientSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
  int cap_ = 0;
};

/// Cauchy product truncated to `cap`; coefficient j is sum_{p+q=j} a_p b_q.
/// Truncation here is requested by the caller: check degree(a)+degree(b)
/// against cap first if exactness matters.
CoefficientSeries multiply(const CoefficientSeries& a, const CoefficientSeries& b, int cap);

CoefficientSeries add(const CoefficientSeries& a, const CoefficientSeries& b);

/// Horner evaluation of the truncated polynomial.
Complex evaluate(const CoefficientSeries& s, Complex z) noexcept;

/// Term-wise derivative; keeps the cap.
CoefficientSeries derivative(const CoefficientSeries& s);

/// Term-wise antiderivative with zero constant term. The result has cap + 1
/// so that derivative(antiderivative(s)) recovers s exactly.
CoefficientSeries antiderivative(const CoefficientSeries& s);

/// c_j -> c_j r^j, i.e. the series of s(r z). Throws InvalidInput for r <= 0.
///
/// The pullback of h_z under z -> r z is r * s(r z); the global factor r is
/// dropped here. It multiplies every quadratic functional built from the
/// result by r^2 and so never changes a sign.
CoefficientSeries rescale_lemma(const CoefficientSeries& s, double r);

}  // namespace minstab

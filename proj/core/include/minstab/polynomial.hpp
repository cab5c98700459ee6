#pragma once

#include <optional>
#include <vector>

namespace minstab {

/// Real polynomial in one variable, coefficients in ascending degree.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Coefficient of r^j; zero outside the stored range.
  double operator[](int j) const noexcept {
    return (j >= 0 && j < static_cast<int>(coeffs_.size()))
               ? coeffs_[static_cast<std::size_t>(j)]
               : 0.0;
  }

  /// Adds `value` to the coefficient of r^power, growing storage as needed.
  void accumulate(int power, double value);

  /// Highest index with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_zero() const noexcept { return degree() < 0; }

  double operator()(double r) const noexcept;

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  friend RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b);
  friend RealPolynomial operator-(const RealPolynomial& a, const RealPolynomial& b);
  friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b);
  friend RealPolynomial operator*(double s, const RealPolynomial& a);

 private:
  std::vector<double> coeffs_;
};

/// Upper bound on the moduli of all roots: 1 + max_i |c_i / c_deg|.
double cauchy_root_bound(const RealPolynomial& p);

/// Sign variations of the Vincent-Collins-Akritas transform of p on (a, b):
/// an upper bound on the number of roots in the open interval with the
/// same parity.
int descartes_bound(const RealPolynomial& p, double a, double b);

/// Smallest root in (0, cauchy bound], isolated by Descartes-driven bisection
/// of the interval and refined by bisection to `tol`. A root of even
/// multiplicity is reported once the isolating interval has shrunk below
/// `tol`. Returns nullopt when p has no positive root.
std::optional<double> smallest_positive_root(const RealPolynomial& p, double tol = 1e-13);

}  // namespace minstab

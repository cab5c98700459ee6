#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "minstab/series.hpp"
#include "minstab/we_geometry.hpp"

namespace minstab {

/// G[m][k] = g(c_m, c_k) = sum_i c_m^i c_k^i for 0 <= m, k <= N, where g is
/// the complex bilinear (not Hermitian) form on C^n.
class GramTable {
 public:
  GramTable(int max_index, std::vector<Complex> entries);

  int max_index() const noexcept { return n_; }
  Complex operator()(int m, int k) const noexcept {
    return entries_[static_cast<std::size_t>(m) * static_cast<std::size_t>(n_ + 1) +
                    static_cast<std::size_t>(k)];
  }

  /// (G[0][s], G[1][s-1], ..., G[s][0]), the entries of total degree s <= N.
  std::vector<Complex> anti_diagonal(int s) const;

  double max_abs() const noexcept;

 private:
  int n_;
  std::vector<Complex> entries_;
};

/// Throws CapacityError when N > d.n_max().
GramTable gram(const WEData& d, int max_index);

struct Violation {
  int m = 0;
  int k = 0;
  Complex value;
};

struct HolomorphyVerdict {
  /// First entry above tolerance in (m + k, m) order; empty when isotropic.
  std::optional<Violation> violation;
  double scale = 0.0;    ///< (max_j |c_j|)^2 over j <= N
  double max_abs = 0.0;  ///< max |G[m][k]|
  int max_index = 0;

  bool isotropic() const noexcept { return !violation.has_value(); }
};

inline constexpr double kDefaultIsotropyTol = 1e-10;

/// Isotropic iff max |G[m][k]| <= tol * scale over m, k <= N.
HolomorphyVerdict holomorphy_check(const WEData& d, int max_index,
                                   double tol = kDefaultIsotropyTol);

/// Orthogonal complex structure J on W = Re(L) for the isotropic span
/// L = span_C{c_0, ..., c_N}.
///
/// `basis` has orthonormal columns spanning W; `matrix` is J in that basis.
/// `translate` is the base point of the affine subspace W + h(0).
struct ComplexStructureJ {
  Eigen::MatrixXd basis;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd translate;
  /// Condition number of the real-part lift system; above 1e8 the lift is
  /// flagged as ill-conditioned.
  double lift_condition = 1.0;
  bool ill_conditioned = false;

  int dimension() const noexcept { return static_cast<int>(matrix.rows()); }

  /// Ambient action x -> B J B^T x (zero on the orthogonal complement of W).
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
};

/// Throws NotIsotropic unless holomorphy_check(d, N, tol) passes.
ComplexStructureJ construct_J(const WEData& d, int max_index, double tol = kDefaultIsotropyTol);

/// E_k = sum_{j<k} (k-j) a_j + sum_{j<N-k} (N-k-j) a_j for 0 <= k <= floor(N/2).
/// `a` must have length N + 1 and satisfy a_j = a_{N-j}; otherwise InvalidInput.
std::vector<Complex> ek_values(std::span<const Complex> a, int max_index);

/// The (floor(N/2)+1) x (floor(N/2)+1) real matrix of a -> (E_k) on symmetric
/// vectors, parametrised by a_0, ..., a_{floor(N/2)}.
Eigen::MatrixXd symmetric_e_matrix(int max_index);

double symmetric_e_matrix_min_singular_value(int max_index);

/// True iff the only symmetric vector with all E_k = 0 is zero
/// (smallest singular value above 1e-8). Throws InvalidInput for N < 1.
bool symmetric_vanishing_solve(int max_index);

}  // namespace minstab

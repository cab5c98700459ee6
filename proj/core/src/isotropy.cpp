#include "minstab/isotropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "minstab/errors.hpp"

namespace minstab {

GramTable::GramTable(int max_index, std::vector<Complex> entries)
    : n_(max_index), entries_(std::move(entries)) {
  const auto side = static_cast<std::size_t>(n_ + 1);
  if (n_ < 0 || entries_.size() != side * side) throw InvalidInput("Gram table has wrong size");
}

std::vector<Complex> GramTable::anti_diagonal(int s) const {
  if (s < 0 || s > n_) throw CapacityError("anti-diagonal " + std::to_string(s) + " outside table");
  std::vector<Complex> out;
  for (int j = 0; j <= s; ++j) out.push_back((*this)(j, s - j));
  return out;
}

double GramTable::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

GramTable gram(const WEData& d, int max_index) {
  if (max_index < 0) throw InvalidInput("Gram index must be >= 0");
  if (max_index > d.n_max()) {
    throw CapacityError("Gram index " + std::to_string(max_index) + " exceeds n_max = " +
                        std::to_string(d.n_max()));
  }
  const auto side = static_cast<std::size_t>(max_index + 1);
  std::vector<Complex> entries(side * side);
  for (int m = 0; m <= max_index; ++m) {
    for (int k = m; k <= max_index; ++k) {
      Complex s{};
      for (const auto& a : d.alphas()) s += a[m] * a[k];
      entries[static_cast<std::size_t>(m) * side + static_cast<std::size_t>(k)] = s;
      entries[static_cast<std::size_t>(k) * side + static_cast<std::size_t>(m)] = s;
    }
  }
  return GramTable(max_index, std::move(entries));
}

namespace {

double jet_scale_upto(const WEData& d, int max_index) {
  double m = 0.0;
  for (int j = 0; j <= max_index; ++j) {
    double s = 0.0;
    for (const auto& a : d.alphas()) s += std::norm(a[j]);
    m = std::max(m, s);
  }
  return m;
}

}  // namespace

HolomorphyVerdict holomorphy_check(const WEData& d, int max_index, double tol) {
  const GramTable g = gram(d, max_index);
  HolomorphyVerdict verdict;
  verdict.max_index = max_index;
  verdict.scale = jet_scale_upto(d, max_index);
  verdict.max_abs = g.max_abs();
  const double threshold = tol * verdict.scale;
  for (int s = 0; s <= 2 * max_index && !verdict.violation; ++s) {
    for (int m = std::max(0, s - max_index); m <= std::min(s, max_index); ++m) {
      const Complex v = g(m, s - m);
      if (std::abs(v) > threshold) {
        verdict.violation = Violation{m, s - m, v};
        break;
      }
    }
  }
  return verdict;
}

Eigen::VectorXd ComplexStructureJ::apply(const Eigen::VectorXd& x) const {
  return basis * (matrix * (basis.transpose() * x));
}

ComplexStructureJ construct_J(const WEData& d, int max_index, double tol) {
  const HolomorphyVerdict verdict = holomorphy_check(d, max_index, tol);
  if (!verdict.isotropic()) {
    const auto& v = *verdict.violation;
    throw NotIsotropic("g(c_" + std::to_string(v.m) + ", c_" + std::to_string(v.k) +
                       ") = " + std::to_string(v.value.real()) + (v.value.imag() < 0 ? "" : "+") +
                       std::to_string(v.value.imag()) + "i is not zero");
  }
  const int n = d.dimension();
  using CVec = Eigen::VectorXcd;

  // Greedy Hermitian Gram-Schmidt picks a maximal C-independent subset of jets.
  const double threshold = 1e-10 * std::sqrt(verdict.scale);
  std::vector<CVec> orthonormal;
  std::vector<CVec> chosen;
  for (int j = 0; j <= max_index; ++j) {
    CVec c(n);
    for (int i = 0; i < n; ++i) c(i) = d.coefficient(i, j);
    CVec r = c;
    for (const auto& q : orthonormal) r -= q * q.dot(r);
    const double norm = r.norm();
    if (norm > threshold) {
      orthonormal.push_back(r / norm);
      chosen.push_back(c);
    }
  }

  const int dim_l = static_cast<int>(chosen.size());
  ComplexStructureJ out;
  out.translate = Eigen::Map<const Eigen::VectorXd>(d.base_point().data(), n);
  if (dim_l == 0) {
    out.basis = Eigen::MatrixXd(n, 0);
    out.matrix = Eigen::MatrixXd(0, 0);
    return out;
  }

  // Re(lambda v) = a Re(v) - b Im(v) and Im(lambda v) = a Im(v) + b Re(v)
  // for lambda = a + i b.
  Eigen::MatrixXd re_part(n, 2 * dim_l);
  Eigen::MatrixXd im_part(n, 2 * dim_l);
  for (int l = 0; l < dim_l; ++l) {
    re_part.col(2 * l) = chosen[static_cast<std::size_t>(l)].real();
    re_part.col(2 * l + 1) = -chosen[static_cast<std::size_t>(l)].imag();
    im_part.col(2 * l) = chosen[static_cast<std::size_t>(l)].imag();
    im_part.col(2 * l + 1) = chosen[static_cast<std::size_t>(l)].real();
  }

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(re_part);
  out.basis = qr.householderQ() * Eigen::MatrixXd::Identity(n, 2 * dim_l);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(re_part);
  const auto& sv = svd.singularValues();
  out.lift_condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1)
                                             : std::numeric_limits<double>::infinity();
  out.ill_conditioned = out.lift_condition > 1e8;

  // Unique lift x in L with Re(x) = u, then J u = -Im(x).
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> lift(re_part);
  const Eigen::MatrixXd coords = lift.solve(out.basis);
  const Eigen::MatrixXd j_ambient = -im_part * coords;
  out.matrix = out.basis.transpose() * j_ambient;
  return out;
}

std::vector<Complex> ek_values(std::span<const Complex> a, int max_index) {
  if (max_index < 0 || a.size() != static_cast<std::size_t>(max_index) + 1) {
    throw InvalidInput("E_k input must have length N + 1");
  }
  double scale = 0.0;
  for (const auto& v : a) scale = std::max(scale, std::abs(v));
  for (int j = 0; j <= max_index; ++j) {
    if (std::abs(a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(max_index - j)]) >
        1e-12 * scale) {
      throw InvalidInput("E_k input is not symmetric: a_" + std::to_string(j) + " != a_" +
                         std::to_string(max_index - j));
    }
  }
  std::vector<Complex> e;
  for (int k = 0; k <= max_index / 2; ++k) {
    Complex s{};
    for (int j = 0; j < k; ++j) s += static_cast<double>(k - j) * a[static_cast<std::size_t>(j)];
    for (int j = 0; j < max_index - k; ++j) {
      s += static_cast<double>(max_index - k - j) * a[static_cast<std::size_t>(j)];
    }
    e.push_back(s);
  }
  return e;
}

Eigen::MatrixXd symmetric_e_matrix(int max_index) {
  if (max_index < 1) throw InvalidInput("symmetric E matrix needs N >= 1");
  const int half = max_index / 2;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(half + 1, half + 1);
  auto column = [max_index](int j) { return std::min(j, max_index - j); };
  for (int k = 0; k <= half; ++k) {
    for (int j = 0; j < k; ++j) m(k, column(j)) += k - j;
    for (int j = 0; j < max_index - k; ++j) m(k, column(j)) += max_index - k - j;
  }
  return m;
}

double symmetric_e_matrix_min_singular_value(int max_index) {
  const Eigen::MatrixXd m = symmetric_e_matrix(max_index);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues().minCoeff();
}

bool symmetric_vanishing_solve(int max_index) {
  return symmetric_e_matrix_min_singular_value(max_index) > 1e-8;
}

}  // namespace minstab

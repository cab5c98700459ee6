#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <limits>
#include <random>
#include <sstream>

#include "minstab/errors.hpp"
#include "minstab/isotropy.hpp"
#include "minstab/oracle.hpp"
#include "minstab/variational.hpp"

#ifndef MINSTAB_VERSION
#define MINSTAB_VERSION "0.0.0"
#endif

namespace minstab::cli {

namespace {

constexpr double kPi = std::numbers::pi;

double resolve_tol(const InputDocument& doc, std::optional<double> flag) {
  if (flag) {
    if (!(*flag > 0.0)) throw InputError("--tol must be positive");
    return *flag;
  }
  return doc.tol.value_or(kDefaultIsotropyTol);
}

GramSummary summarize(const HolomorphyVerdict& v, double tol, double residual) {
  GramSummary g;
  g.max_index = v.max_index;
  g.max_abs = v.max_abs;
  g.scale = v.scale;
  g.tol = tol;
  g.conformality_residual = residual;
  if (v.violation) {
    g.violation_m = v.violation->m;
    g.violation_k = v.violation->k;
    g.violation_value = v.violation->value;
  }
  return g;
}

CertificateReport report_certificate(const DestabCertificate& c) {
  return {c.phi.k, c.phi.m, c.phi.theta, c.phi.y, c.phi.one_term, c.r,
          c.value, c.verified_by_oracle, c.oracle_value, c.total_degree};
}

JReport report_J(const ComplexStructureJ& j) {
  JReport out;
  out.dimension = j.dimension();
  for (Eigen::Index c = 0; c < j.basis.cols(); ++c) {
    out.basis.emplace_back(j.basis.col(c).data(), j.basis.col(c).data() + j.basis.rows());
  }
  for (Eigen::Index r = 0; r < j.matrix.rows(); ++r) {
    std::vector<double> row;
    for (Eigen::Index c = 0; c < j.matrix.cols(); ++c) row.push_back(j.matrix(r, c));
    out.matrix.push_back(std::move(row));
  }
  out.translate.assign(j.translate.data(), j.translate.data() + j.translate.size());
  out.lift_condition = std::isfinite(j.lift_condition) ? j.lift_condition : 1e300;
  out.ill_conditioned = j.ill_conditioned;
  return out;
}

ReportDocument base_report(const std::string& command) {
  ReportDocument r;
  r.command = command;
  r.verdict = "undetermined";
  r.tool_version = tool_version();
  return r;
}

}  // namespace

std::string tool_version() { return MINSTAB_VERSION; }

ReportDocument run_check(const InputDocument& doc, const CheckParams& params) {
  const int n_max = effective_n_max(doc);
  const double tol = resolve_tol(doc, params.tol);
  const WEData d = to_wedata(doc, n_max);
  const int N = params.N.value_or(n_max);
  if (N < 0) throw InputError("--N must be nonnegative");
  if (N > n_max) throw CapacityError("--N " + std::to_string(N) + " exceeds n_max " + std::to_string(n_max));
  if (d.conformality_residual() > tol) {
    throw InputError("data are not conformal: residual " + std::to_string(d.conformality_residual()));
  }

  ReportDocument r = base_report("check");
  r.parameters = {{"kind", doc.is_r3() ? "r3" : "wedata"}, {"N", N}, {"n_max", n_max}, {"tol", tol}};
  const HolomorphyVerdict v = holomorphy_check(d, N, tol);
  r.gram_summary = summarize(v, tol, d.conformality_residual());

  if (v.isotropic()) {
    r.J = report_J(construct_J(d, N, tol));
    // Entries past the data degree vanish, so only then is the check complete.
    r.verdict = N >= d.degree() ? "holomorphic" : "undetermined";
    return r;
  }
  SearchOptions options;
  options.tol = tol;
  if (const auto cert = destab_search(d, options)) {
    r.certificate = report_certificate(*cert);
    if (cert->verified_by_oracle) r.verdict = "unstable";
  }
  return r;
}

ReportDocument run_radius(const InputDocument& doc) {
  if (!doc.is_r3()) throw InputError("radius needs an \"r3\" input");
  const R3Rep rep = to_r3(doc.r3());
  RadiusResult res;
  try {
    res = radius_r3(rep);
  } catch (const InvalidInput& e) {
    throw InputError(e.what());
  }
  const int n_max = effective_n_max(doc);

  ReportDocument r = base_report("radius");
  r.parameters = {{"kind", "r3"}, {"n_max", n_max}};
  r.radius = RadiusReport{res.r0, {}, res.fast_path, res.k, res.m, res.gamma};
  for (int p = 0; p <= res.poly.degree(); ++p) r.radius->poly.push_back(res.poly[p]);

  const int pole = res.k + res.m;
  const int data_degree = rep.f().degree() + 2 * rep.g().degree();
  if (2 * pole > n_max || data_degree > n_max) return r;

  const WEData d = from_r3(rep, n_max);
  const HolomorphyVerdict v = holomorphy_check(d, n_max);
  r.gram_summary = summarize(v, kDefaultIsotropyTol, d.conformality_residual());

  DestabCertificate cert;
  cert.phi = TestFunction::single(pole, res.gamma);
  cert.r = res.r0 * 1.01;
  cert.value = F_h(d, cert.phi, cert.r);
  cert.oracle_value = F_h_quadrature(d, cert.phi, cert.r);
  cert.total_degree = 2 * pole;
  cert.verified_by_oracle = cert.value < 0.0 && cert.oracle_value < 0.0 &&
                            std::abs(cert.oracle_value - cert.value) <= 1e-6 * std::abs(cert.value);
  r.certificate = report_certificate(cert);
  if (cert.verified_by_oracle) r.verdict = "unstable";
  return r;
}

ReportDocument run_verify(const InputDocument& doc, const VerifyParams& params) {
  if (params.trials < 0) throw InputError("--trials must be nonnegative");
  ReportDocument r = run_check(doc, {});
  r.command = "verify";
  r.parameters["trials"] = params.trials;
  r.parameters["seed"] = params.seed;
  r.parameters["max_deviation"] = params.max_deviation;

  VerifyReport v;
  v.seed = params.seed;
  v.trials = params.trials;

  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 10; ++b) {
      const Complex exact = a == b ? Complex{2.0 * kPi / (a + b + 2)} : Complex{};
      v.monomial_max_deviation = std::max(v.monomial_max_deviation, std::abs(monomial_integral(a, b) - exact));
    }
  }

  const int n_max = effective_n_max(doc);
  const WEData d = to_wedata(doc, n_max);
  const bool isotropic = r.gram_summary.violation_m == std::nullopt;
  const double scale = d.jet_scale() * d.jet_scale();
  const int pole_max = std::max(1, std::min(5, n_max / 2));
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<int> pole_dist(1, pole_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  v.functional_min_value = std::numeric_limits<double>::infinity();
  for (int t = 0; t < params.trials; ++t) {
    int k = pole_dist(rng);
    int m = pole_dist(rng);
    if (k > m) std::swap(k, m);
    const double theta = 2.0 * kPi * unit(rng);
    const double y = -2.0 + 4.0 * unit(rng);
    const double radius = 0.2 + 2.8 * unit(rng);
    const TestFunction phi = TestFunction::two_term(k, m, theta, y);
    const double closed = F_h(d, phi, radius);
    const double quad = F_h_quadrature(d, phi, radius);
    v.functional_max_relative_deviation =
        std::max(v.functional_max_relative_deviation, std::abs(closed - quad) / (1.0 + std::abs(closed)));
    v.functional_min_value = std::min(v.functional_min_value, closed);
    if (isotropic && closed < -1e-10 * std::max(1.0, scale)) v.isotropic_nonnegative = false;
  }
  if (params.trials == 0) v.functional_min_value = 0.0;

  v.passed = v.monomial_max_deviation <= 1e-10 && v.functional_max_relative_deviation <= params.max_deviation &&
             v.isotropic_nonnegative;

  if (doc.is_r3()) {
    const R3Rep rep = to_r3(doc.r3());
    if (rep.m()) {
      const double r0 = radius_r3(rep).r0;
      RayleighOptions options;
      options.radial = params.rayleigh_radial;
      options.angular = params.rayleigh_angular;
      options.richardson_check = false;
      double previous = r0 * 0.5;
      bool positive = rayleigh_r3(rep, previous, options).eigenvalue > 0.0;
      for (int i = 1; i <= 20 && positive; ++i) {
        const double radius = r0 * (0.5 + 0.05 * i);
        const double lambda = rayleigh_r3(rep, radius, options).eigenvalue;
        if (lambda <= 0.0) {
          v.rayleigh_flip_lo = previous;
          v.rayleigh_flip_hi = radius;
          positive = false;
        }
        previous = radius;
      }
      try {
        RayleighOptions checked = options;
        checked.richardson_check = true;
        v.rayleigh_at_breach_radius = rayleigh_r3(rep, 1.05 * r0, checked).eigenvalue;
        if (*v.rayleigh_at_breach_radius >= 0.0) v.passed = false;
      } catch (const GridTooCoarse&) {
        v.passed = false;
      }
    }
  }
  r.verification = v;
  return r;
}

void write_mesh(const InputDocument& doc, const MeshParams& params, std::ostream& out) {
  if (!(params.radius > 0.0)) throw InputError("--radius must be positive");
  if (params.samples < 8) throw InputError("--samples must be at least 8");
  const WEData d = to_wedata(doc, effective_n_max(doc));
  const int rings = params.samples / 2;
  const int around = params.samples;

  out << std::setprecision(17);
  out << "# minstab " << tool_version() << " radius " << params.radius << " rings " << rings << " angular "
      << around << "\n";
  auto vertex = [&](Complex z) {
    const std::vector<double> x = surface_point(d, z);
    out << "v " << x[0] << ' ' << x[1] << ' ' << (x.size() > 2 ? x[2] : 0.0) << "\n";
    if (x.size() > 3) {
      out << "# x";
      for (std::size_t i = 3; i < x.size(); ++i) out << ' ' << x[i];
      out << "\n";
    }
  };
  vertex(Complex{});
  for (int i = 1; i <= rings; ++i) {
    const double rho = params.radius * i / rings;
    for (int t = 0; t < around; ++t) vertex(std::polar(rho, 2.0 * kPi * t / around));
  }
  // OBJ indices are 1-based; vertex 1 is the centre.
  auto index = [around](int ring, int t) { return 2 + (ring - 1) * around + t % around; };
  for (int t = 0; t < around; ++t) out << "f 1 " << index(1, t) << ' ' << index(1, t + 1) << "\n";
  for (int i = 1; i < rings; ++i) {
    for (int t = 0; t < around; ++t) {
      const int a = index(i, t);
      const int b = index(i, t + 1);
      const int c = index(i + 1, t + 1);
      const int e = index(i + 1, t);
      out << "f " << a << ' ' << e << ' ' << c << "\n";
      out << "f " << a << ' ' << c << ' ' << b << "\n";
    }
  }
}

void write_mesh_file(const InputDocument& doc, const MeshParams& params, const std::string& path) {
  std::ostringstream buffer;
  write_mesh(doc, params, buffer);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << buffer.str();
  file.flush();
  if (!file) throw IoError("write to " + path + " failed");
}

}  // namespace minstab::cli

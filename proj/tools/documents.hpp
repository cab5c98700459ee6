#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "minstab/series.hpp"
#include "minstab/we_geometry.hpp"

namespace minstab::cli {

using json = nlohmann::json;

/// Malformed or schema-violating input (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WEInput {
  int n = 0;
  std::vector<std::vector<Complex>> alphas;
  std::vector<double> base;
};

struct R3Input {
  std::vector<Complex> f;
  std::vector<Complex> g;
};

struct InputDocument {
  std::variant<WEInput, R3Input> data;
  std::optional<int> n_max;
  std::optional<double> tol;

  bool is_r3() const noexcept { return std::holds_alternative<R3Input>(data); }
  const R3Input& r3() const { return std::get<R3Input>(data); }
};

InputDocument parse_input(const json& j);
InputDocument parse_input_text(const std::string& text);
InputDocument read_input(const std::string& path);

/// n_max from the document, else MINSTAB_N_MAX, else the library default.
int effective_n_max(const InputDocument& doc);

R3Rep to_r3(const R3Input& in);
/// Throws CapacityError when the data do not fit in n_max.
WEData to_wedata(const InputDocument& doc, int n_max);

struct GramSummary {
  int max_index = 0;
  double max_abs = 0.0;
  double scale = 0.0;
  double tol = 0.0;
  double conformality_residual = 0.0;
  std::optional<int> violation_m;
  std::optional<int> violation_k;
  std::optional<Complex> violation_value;

  friend bool operator==(const GramSummary&, const GramSummary&) = default;
};

struct CertificateReport {
  int k = 0;
  int m = 0;
  double theta = 0.0;
  double y = 0.0;
  bool one_term = false;
  double r = 0.0;
  double value = 0.0;
  bool verified_by_oracle = false;
  double oracle_value = 0.0;
  int total_degree = 0;

  friend bool operator==(const CertificateReport&, const CertificateReport&) = default;
};

struct RadiusReport {
  double r0 = 0.0;
  std::vector<double> poly;  ///< ascending powers of r
  std::optional<double> fast_path;
  int k = 0;
  int m = 0;
  Complex gamma;

  friend bool operator==(const RadiusReport&, const RadiusReport&) = default;
};

struct JReport {
  int dimension = 0;
  std::vector<std::vector<double>> basis;   ///< ambient columns
  std::vector<std::vector<double>> matrix;  ///< rows
  std::vector<double> translate;
  double lift_condition = 1.0;
  bool ill_conditioned = false;

  friend bool operator==(const JReport&, const JReport&) = default;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int trials = 0;
  double monomial_max_deviation = 0.0;
  double functional_max_relative_deviation = 0.0;
  double functional_min_value = 0.0;
  bool isotropic_nonnegative = true;
  std::optional<double> rayleigh_flip_lo;
  std::optional<double> rayleigh_flip_hi;
  std::optional<double> rayleigh_at_breach_radius;
  bool passed = true;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct ReportDocument {
  std::string command;
  std::string verdict;  ///< "holomorphic" | "unstable" | "undetermined"
  GramSummary gram_summary;
  std::optional<CertificateReport> certificate;
  std::optional<RadiusReport> radius;
  std::optional<JReport> J;
  std::optional<VerifyReport> verification;
  std::string tool_version;
  json parameters = json::object();

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

json to_json(const ReportDocument& r);
ReportDocument report_from_json(const json& j);

}  // namespace minstab::cli

#include "documents.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "minstab/errors.hpp"

namespace minstab::cli {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

void allow_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) fail(where, "unexpected key \"" + key + "\"");
  }
}

double real_value(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "non-finite number");
  return v;
}

Complex complex_value(const json& j, const std::string& where) {
  if (j.is_number()) return {real_value(j, where), 0.0};
  if (!j.is_array() || j.size() != 2) fail(where, "expected [re, im] or a number");
  return {real_value(j[0], where + "[0]"), real_value(j[1], where + "[1]")};
}

std::vector<Complex> complex_array(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of coefficients");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(complex_value(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

int int_value(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

const json& required(const json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

}  // namespace

InputDocument parse_input(const json& j) {
  if (!j.is_object()) fail("input", "expected a JSON object");
  const json& kind = required(j, "kind", "input");
  if (!kind.is_string()) fail("kind", "expected a string");

  InputDocument doc;
  const std::string k = kind.get<std::string>();
  if (k == "wedata") {
    allow_keys(j, {"kind", "n", "alphas", "base", "n_max", "tol", "comment"}, "input");
    WEInput in;
    in.n = int_value(required(j, "n", "input"), "n");
    if (in.n < 2) fail("n", "must be at least 2");
    const json& alphas = required(j, "alphas", "input");
    if (!alphas.is_array() || static_cast<int>(alphas.size()) != in.n) {
      fail("alphas", "expected one coefficient array per coordinate (" + std::to_string(in.n) + ")");
    }
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      in.alphas.push_back(complex_array(alphas[i], "alphas[" + std::to_string(i) + "]"));
    }
    if (const auto it = j.find("base"); it != j.end()) {
      if (!it->is_array() || static_cast<int>(it->size()) != in.n) fail("base", "expected n reals");
      for (std::size_t i = 0; i < it->size(); ++i) in.base.push_back(real_value((*it)[i], "base"));
    }
    doc.data = std::move(in);
  } else if (k == "r3") {
    allow_keys(j, {"kind", "f", "g", "n_max", "tol", "comment"}, "input");
    R3Input in;
    in.f = complex_array(required(j, "f", "input"), "f");
    in.g = complex_array(required(j, "g", "input"), "g");
    doc.data = std::move(in);
  } else {
    fail("kind", "must be \"wedata\" or \"r3\"");
  }

  if (const auto it = j.find("n_max"); it != j.end()) {
    doc.n_max = int_value(*it, "n_max");
    if (*doc.n_max < 1) fail("n_max", "must be positive");
  }
  if (const auto it = j.find("tol"); it != j.end()) {
    doc.tol = real_value(*it, "tol");
    if (!(*doc.tol > 0.0)) fail("tol", "must be positive");
  }
  return doc;
}

InputDocument parse_input_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_input(j);
}

InputDocument read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_input_text(text.str());
}

int effective_n_max(const InputDocument& doc) {
  if (doc.n_max) return *doc.n_max;
  if (const char* env = std::getenv("MINSTAB_N_MAX"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 100000) throw InputError("MINSTAB_N_MAX must be a positive integer");
    return static_cast<int>(v);
  }
  return kDefaultNMax;
}

R3Rep to_r3(const R3Input& in) {
  try {
    return R3Rep(CoefficientSeries::from_vector(in.f), CoefficientSeries::from_vector(in.g));
  } catch (const InvalidInput& e) {
    throw InputError(e.what());
  }
}

WEData to_wedata(const InputDocument& doc, int n_max) {
  if (doc.is_r3()) return from_r3(to_r3(doc.r3()), n_max);
  const auto& in = std::get<WEInput>(doc.data);
  std::vector<CoefficientSeries> alphas;
  for (const auto& c : in.alphas) alphas.push_back(CoefficientSeries::from_vector(c));
  try {
    return WEData(std::move(alphas), in.base, n_max);
  } catch (const InvalidInput& e) {
    throw InputError(e.what());
  }
}

json to_json(const ReportDocument& r) {
  json j;
  j["command"] = r.command;
  j["verdict"] = r.verdict;

  const GramSummary& g = r.gram_summary;
  json gs{{"max_index", g.max_index},
          {"max_abs", g.max_abs},
          {"scale", g.scale},
          {"tol", g.tol},
          {"conformality_residual", g.conformality_residual}};
  if (g.violation_m) {
    gs["first_violation"] = {{"m", *g.violation_m}, {"k", *g.violation_k}, {"value", complex_json(*g.violation_value)}};
  }
  j["gram_summary"] = gs;

  if (r.certificate) {
    const auto& c = *r.certificate;
    j["certificate"] = {{"phi", {{"k", c.k}, {"m", c.m}, {"theta", c.theta}, {"y", c.y}, {"one_term", c.one_term}}},
                        {"r", c.r},
                        {"value", c.value},
                        {"verified_by_oracle", c.verified_by_oracle},
                        {"oracle_value", c.oracle_value},
                        {"total_degree", c.total_degree}};
  }
  if (r.radius) {
    const auto& rad = *r.radius;
    json rj{{"r0", rad.r0}, {"poly", rad.poly}, {"k", rad.k}, {"m", rad.m}, {"gamma", complex_json(rad.gamma)}};
    put_optional(rj, "fast_path", rad.fast_path);
    j["radius"] = rj;
  }
  if (r.J) {
    const auto& J = *r.J;
    j["J"] = {{"dimension", J.dimension},
              {"basis", J.basis},
              {"matrix", J.matrix},
              {"translate", J.translate},
              {"lift_condition", J.lift_condition},
              {"ill_conditioned", J.ill_conditioned}};
  }
  if (r.verification) {
    const auto& v = *r.verification;
    json vj{{"seed", v.seed},
            {"trials", v.trials},
            {"monomial_max_deviation", v.monomial_max_deviation},
            {"functional_max_relative_deviation", v.functional_max_relative_deviation},
            {"functional_min_value", v.functional_min_value},
            {"isotropic_nonnegative", v.isotropic_nonnegative},
            {"passed", v.passed}};
    put_optional(vj, "rayleigh_flip_lo", v.rayleigh_flip_lo);
    put_optional(vj, "rayleigh_flip_hi", v.rayleigh_flip_hi);
    put_optional(vj, "rayleigh_at_breach_radius", v.rayleigh_at_breach_radius);
    j["verification"] = vj;
  }
  j["tool_version"] = r.tool_version;
  j["parameters"] = r.parameters;
  return j;
}

ReportDocument report_from_json(const json& j) {
  ReportDocument r;
  r.command = j.at("command").get<std::string>();
  r.verdict = j.at("verdict").get<std::string>();
  if (r.verdict != "holomorphic" && r.verdict != "unstable" && r.verdict != "undetermined") {
    throw InputError("unknown verdict " + r.verdict);
  }

  const json& gs = j.at("gram_summary");
  r.gram_summary.max_index = gs.at("max_index").get<int>();
  r.gram_summary.max_abs = gs.at("max_abs").get<double>();
  r.gram_summary.scale = gs.at("scale").get<double>();
  r.gram_summary.tol = gs.at("tol").get<double>();
  r.gram_summary.conformality_residual = gs.at("conformality_residual").get<double>();
  if (const auto it = gs.find("first_violation"); it != gs.end()) {
    r.gram_summary.violation_m = it->at("m").get<int>();
    r.gram_summary.violation_k = it->at("k").get<int>();
    r.gram_summary.violation_value = complex_from(it->at("value"));
  }

  if (const auto it = j.find("certificate"); it != j.end()) {
    CertificateReport c;
    const json& phi = it->at("phi");
    c.k = phi.at("k").get<int>();
    c.m = phi.at("m").get<int>();
    c.theta = phi.at("theta").get<double>();
    c.y = phi.at("y").get<double>();
    c.one_term = phi.at("one_term").get<bool>();
    c.r = it->at("r").get<double>();
    c.value = it->at("value").get<double>();
    c.verified_by_oracle = it->at("verified_by_oracle").get<bool>();
    c.oracle_value = it->at("oracle_value").get<double>();
    c.total_degree = it->at("total_degree").get<int>();
    r.certificate = c;
  }
  if (const auto it = j.find("radius"); it != j.end()) {
    RadiusReport rad;
    rad.r0 = it->at("r0").get<double>();
    rad.poly = it->at("poly").get<std::vector<double>>();
    rad.fast_path = get_optional<double>(*it, "fast_path");
    rad.k = it->at("k").get<int>();
    rad.m = it->at("m").get<int>();
    rad.gamma = complex_from(it->at("gamma"));
    r.radius = rad;
  }
  if (const auto it = j.find("J"); it != j.end()) {
    JReport J;
    J.dimension = it->at("dimension").get<int>();
    J.basis = it->at("basis").get<std::vector<std::vector<double>>>();
    J.matrix = it->at("matrix").get<std::vector<std::vector<double>>>();
    J.translate = it->at("translate").get<std::vector<double>>();
    J.lift_condition = it->at("lift_condition").get<double>();
    J.ill_conditioned = it->at("ill_conditioned").get<bool>();
    r.J = J;
  }
  if (const auto it = j.find("verification"); it != j.end()) {
    VerifyReport v;
    v.seed = it->at("seed").get<std::uint64_t>();
    v.trials = it->at("trials").get<int>();
    v.monomial_max_deviation = it->at("monomial_max_deviation").get<double>();
    v.functional_max_relative_deviation = it->at("functional_max_relative_deviation").get<double>();
    v.functional_min_value = it->at("functional_min_value").get<double>();
    v.isotropic_nonnegative = it->at("isotropic_nonnegative").get<bool>();
    v.passed = it->at("passed").get<bool>();
    v.rayleigh_flip_lo = get_optional<double>(*it, "rayleigh_flip_lo");
    v.rayleigh_flip_hi = get_optional<double>(*it, "rayleigh_flip_hi");
    v.rayleigh_at_breach_radius = get_optional<double>(*it, "rayleigh_at_breach_radius");
    r.verification = v;
  }
  r.tool_version = j.at("tool_version").get<std::string>();
  r.parameters = j.at("parameters");
  return r;
}

}  // namespace minstab::cli

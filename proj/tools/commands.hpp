#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "documents.hpp"

namespace minstab::cli {

/// Output could not be written (exit code 5).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kOk = 0, kInput = 2, kCapacity = 3, kBreach = 4, kIo = 5 };

std::string tool_version();

struct CheckParams {
  std::optional<int> N;
  std::optional<double> tol;
};

/// holomorphy_check, then construct_J or destab_search.
ReportDocument run_check(const InputDocument& doc, const CheckParams& params);

/// R^3 input only; a certificate gamma z^{-(k+m)} just past r0 is attached
/// when the capacity allows it.
ReportDocument run_radius(const InputDocument& doc);

struct VerifyParams {
  int trials = 50;
  std::uint64_t seed = 20240611;
  int rayleigh_radial = 100;
  int rayleigh_angular = 128;
  /// Largest accepted |F_closed - F_quadrature| / (1 + |F_closed|).
  double max_deviation = 1e-8;
};

ReportDocument run_verify(const InputDocument& doc, const VerifyParams& params);

struct MeshParams {
  double radius = 1.0;
  int samples = 32;
};

/// Polar-grid OBJ of h on |z| <= radius: a centre vertex and samples/2 rings
/// of `samples` vertices, counter-clockwise triangles.
void write_mesh(const InputDocument& doc, const MeshParams& params, std::ostream& out);
void write_mesh_file(const InputDocument& doc, const MeshParams& params, const std::string& path);

}  // namespace minstab::cli

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "minstab/errors.hpp"

using namespace minstab::cli;

namespace {

void emit(const ReportDocument& report) { std::cout << to_json(report).dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability of branched minimal disks from Weierstrass-Enneper data", "minstab"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::string input;
  std::optional<int> check_n;
  std::optional<double> check_tol;
  auto* check = app.add_subcommand("check", "Holomorphicity verdict, destabilising certificate or J");
  check->add_option("input", input, "Input JSON")->required();
  check->add_option("--N", check_n, "Largest Gram index examined (default n_max)");
  check->add_option("--tol", check_tol, "Relative isotropy tolerance");

  auto* radius = app.add_subcommand("radius", "Destabilisation radius for (f, g) data");
  radius->add_option("input", input, "Input JSON of kind r3")->required();

  VerifyParams verify_params;
  auto* verify = app.add_subcommand("verify", "Run the quadrature and Rayleigh oracles against the closed forms");
  verify->add_option("input", input, "Input JSON")->required();
  verify->add_option("--trials", verify_params.trials, "Randomised functional trials")->capture_default_str();
  verify->add_option("--seed", verify_params.seed, "Seed for the trials")->capture_default_str();
  verify->add_option("--max-deviation", verify_params.max_deviation, "Accepted closed-vs-quadrature deviation")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--rayleigh-radial", verify_params.rayleigh_radial, "Radial Rayleigh grid")
      ->capture_default_str()
      ->check(CLI::Range(4, 4000));
  verify->add_option("--rayleigh-angular", verify_params.rayleigh_angular, "Angular Rayleigh grid")
      ->capture_default_str()
      ->check(CLI::Range(8, 4096));

  MeshParams mesh_params;
  std::string mesh_out;
  auto* mesh = app.add_subcommand("mesh", "Write an OBJ polar-grid mesh of the surface patch");
  mesh->add_option("input", input, "Input JSON")->required();
  mesh->add_option("output", mesh_out, "OBJ file to write")->required();
  mesh->add_option("--radius", mesh_params.radius, "Disk radius")->capture_default_str();
  mesh->add_option("--samples", mesh_params.samples, "Angular samples (>= 8)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    const InputDocument doc = read_input(input);
    if (check->parsed()) {
      emit(run_check(doc, {check_n, check_tol}));
    } else if (radius->parsed()) {
      emit(run_radius(doc));
    } else if (verify->parsed()) {
      const ReportDocument report = run_verify(doc, verify_params);
      emit(report);
      if (!report.verification->passed) {
        std::cerr << "minstab: verification tolerance breached\n";
        return kBreach;
      }
    } else if (mesh->parsed()) {
      write_mesh_file(doc, mesh_params, mesh_out);
    }
  } catch (const InputError& e) {
    std::cerr << "minstab: " << e.what() << "\n";
    return kInput;
  } catch (const minstab::CapacityError& e) {
    std::cerr << "minstab: capacity exceeded: " << e.what() << "\n";
    return kCapacity;
  } catch (const IoError& e) {
    std::cerr << "minstab: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "minstab: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}

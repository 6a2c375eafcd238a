#include "gravent/cli/app.hpp"

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gravent/cli/commands.hpp"
#include "gravent/errors.hpp"

namespace gravent::cli {

namespace {

constexpr double kReplayTolerance = 1e-15;

void add_options(CLI::App& app, Options& o) {
  auto num = [&](const std::string& flag, auto& field, const std::string& help) {
    app.add_option(flag, field, help)->capture_default_str();
  };
  num("--omega-khz", o.omega_khz, "frequency scale omega, in units of 1e3 rad/s");
  num("--lambda1", o.lambda1, "spring constant of oscillator 1 (k/(m omega^2))");
  num("--lambda2", o.lambda2, "spring constant of oscillator 2");
  num("--eta", o.eta, "gravitational coupling");
  num("--mu", o.mu, "white-noise decoherence strength");
  num("--chi", o.chi, "initial trap frequency over omega");
  num("--tau-max", o.tau_max, "final dimensionless time omega*t");
  num("--steps", o.steps, "trace: number of time samples");
  num("--grid", o.grid, "axes as name:min:max:count[:log],...");
  num("--target-en", o.target_en, "target log negativity");
  app.add_option("--mode", o.mode, "tau-ent: asymptotic, numeric or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"asymptotic", "numeric", "both"}));
  app.add_flag("--decoherence", o.decoherence,
               "tau-ent: include mu in the entanglement time");

  num("--mass-mg", o.mass_mg, "oscillator / mirror mass in mg");
  num("--density-gcc", o.density_gcc, "mass over separation cubed, g/cm^3");
  num("--separation-mm", o.separation_mm,
      "centre distance in mm (0: from mass and density)");
  num("--pressure-pa", o.pressure_pa, "gas pressure in Pa");
  num("--temperature-k", o.temperature_k, "gas temperature in K");
  num("--radius-mm", o.radius_mm, "oscillator radius in mm");
  num("--pmax-radius-mm", o.pmax_radius_mm,
      "oscillator radius for the pressure bound, mm");
  num("--gas-mass-kg", o.gas_mass_kg, "gas molecule mass in kg");
  num("--omega-in-mhz", o.omega_in_mhz,
      "initial trap frequency, in units of 1e6 rad/s");
  num("--wavelength-nm", o.wavelength_nm, "laser wavelength in nm");
  num("--transmittance", o.transmittance, "input mirror power transmittance");
  num("--detuning-ratio", o.detuning_ratio, "|Delta|/kappa of the detuned cavity");
  num("--power-lower-kw", o.power_lower_kw, "lower intracavity power in kW");
  num("--power-upper-kw", o.power_upper_kw,
      "upper intracavity power in kW (negative: levitation balance)");
  num("--a-lower-mm", o.a_lower_mm, "lower curvature-centre distance in mm");
  num("--a-upper-harmonic-mm", o.a_upper_harmonic_mm,
      "upper distance of the trapping configuration, mm");
  num("--a-upper-inverted-mm", o.a_upper_inverted_mm,
      "upper distance of the inverted configuration, mm");
  num("--gravity", o.gravity, "gravitational acceleration in m/s^2");

  app.add_option("--format", o.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", o.out, "output path (default: stdout)");
  app.add_option("--jobs", o.jobs, "worker threads for sweeps")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

int replay(const std::string& path) {
  const RunRecord original = read_record(path);
  Options o;
  o.apply(original.inputs);
  const RunRecord again = run_command(original.command, o);
  const double diff = max_relative_difference(original, again);
  std::cout << "replay " << original.command << ": max relative difference "
            << format_double(diff) << '\n';
  return diff <= kReplayTolerance ? kSuccess : kSolverFailure;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Gravity-induced entanglement of two oscillators"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key = value file; flags win");

  Options o;
  add_options(app, o);
  const char* commands[][2] = {
      {"trace", "E_N and f_gra/f_dec against time"},
      {"contour", "E_N over a parameter grid at tau-max"},
      {"tau-ent", "time for E_N to reach target-en"},
      {"budget", "decoherence budget with verdicts"},
      {"design-check", "sandwich-mirror stiffness and switchability"},
  };
  for (const auto& c : commands) app.add_subcommand(c[0], c[1]);
  std::string record_path;
  app.add_subcommand("replay", "re-run a saved record and compare")
      ->add_option("record", record_path, "CSV or JSON record")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInvalidParameters;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "replay") return replay(record_path);
    const RunRecord record = run_command(command, o);
    write_record(record, parse_format(o.format), o.out);
    return kSuccess;
  } catch (const NoEntanglement& e) {
    std::cerr << "gravent: " << e.what()
              << " (max E_N = " << format_double(e.max_log_negativity())
              << ")\n";
    return kNoEntanglement;
  } catch (const InvalidParameter& e) {
    std::cerr << "gravent: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const DomainError& e) {
    std::cerr << "gravent: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const Unsupported& e) {
    std::cerr << "gravent: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const ApproximationInvalid& e) {
    std::cerr << "gravent: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const Error& e) {
    std::cerr << "gravent: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const std::exception& e) {
    std::cerr << "gravent: " << e.what() << '\n';
    return kSolverFailure;
  }
}

}  // namespace gravent::cli

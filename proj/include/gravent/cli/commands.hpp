#pragma once

// The subcommands as library calls: each takes the full option set and
// returns a RunRecord. The `gravent` executable only parses flags and writes
// the record.

#include <string>
#include <utility>
#include <vector>

#include "gravent/cli/record.hpp"
#include "gravent/cli/sweep.hpp"
#include "gravent/core_model.hpp"

namespace gravent::cli {

/// Every flag of the command line, in CLI units. Defaults reproduce the
/// reference configuration: η = 2μ = 1e-12 at ω = 1 kHz for the dynamics and
/// the 0.1 mg levitated mirror for the budget.
struct Options {
  // Dynamics.
  double omega_khz = 1.0;
  double lambda1 = -1.0;
  double lambda2 = -1.0;
  double eta = 1e-12;
  double mu = 5e-13;
  double chi = 1.0;
  double tau_max = 13.0;
  int steps = 200;
  std::string grid;
  double target_en = 1e-2;
  std::string mode = "asymptotic";  // tau-ent: asymptotic | numeric | both
  bool decoherence = false;

  // Budget and design.
  double mass_mg = 0.1;
  double density_gcc = 2.0;
  double separation_mm = 0.0;  // 0: derived from mass and density
  double pressure_pa = 1e-17;
  double temperature_k = 1.0;
  double radius_mm = 0.2;
  double pmax_radius_mm = 0.1;
  double gas_mass_kg = 4.7e-26;
  double omega_in_mhz = 1.0;
  double wavelength_nm = 1064.0;
  double transmittance = 0.1;
  double detuning_ratio = 100.0;
  double power_lower_kw = 30.0;
  double power_upper_kw = -1.0;  // negative: chosen to levitate exactly
  double a_lower_mm = 2.0;
  double a_upper_harmonic_mm = 1.0;
  double a_upper_inverted_mm = 3.0;
  double gravity = 9.81;

  // Output.
  std::string format = "csv";
  std::string out;
  unsigned jobs = 1;

  /// The dynamics fields as SystemParams.
  SystemParams system() const;

  /// key/value text for every field, %.17g for numbers; round-trips through
  /// apply().
  std::vector<std::pair<std::string, std::string>> to_inputs() const;
  /// Sets the fields named in `inputs`; unknown keys throw InvalidParameter.
  void apply(const std::vector<std::pair<std::string, std::string>>& inputs);
};

/// τ, numeric E_N, perturbative E_N, f_gra and f_dec on `steps` evenly spaced
/// times in [0, tau_max]. Per-row failures land in the `error` column.
RunRecord cmd_trace(const Options& o);

/// E_N on a grid (default λ₁, λ₂ ∈ [−1, 1], 41 × 41) at τ = tau_max.
RunRecord cmd_contour(const Options& o);

/// Entanglement time in seconds; with --grid, a scan over one or more axes.
/// A single-point run throws NoEntanglement when no crossing exists.
RunRecord cmd_tau_ent(const Options& o);

/// Decoherence budget with reference values and the two feasibility verdicts.
RunRecord cmd_budget(const Options& o);

/// Sandwich-mirror stiffness and the trap/inverted switchability report.
RunRecord cmd_design_check(const Options& o);

/// Dispatches by subcommand name.
RunRecord run_command(const std::string& command, const Options& o);

/// Largest relative difference between the numeric cells of two records with
/// the same shape; string cells must match exactly (otherwise +inf).
double max_relative_difference(const RunRecord& a, const RunRecord& b);

/// The sweep described by the options (the --grid text, the fixed fields and
/// output settings).
SweepSpec sweep_from(const Options& o, SweepKind kind,
                     const std::string& default_grid);

}  // namespace gravent::cli

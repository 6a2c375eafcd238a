#include "gravent/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <variant>

#include "gravent/analytic.hpp"
#include "gravent/decoherence.hpp"
#include "gravent/design.hpp"
#include "gravent/errors.hpp"
#include "gravent/units.hpp"

#ifndef GRAVENT_VERSION
#define GRAVENT_VERSION "0.0.0"
#endif

namespace gravent::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const std::string kDefaultContourGrid = "lambda1:-1:1:41,lambda2:-1:1:41";

using Member = std::variant<double Options::*, int Options::*,
                            unsigned Options::*, bool Options::*,
                            std::string Options::*>;

const std::vector<std::pair<std::string, Member>>& fields() {
  static const std::vector<std::pair<std::string, Member>> table = {
      {"omega-khz", &Options::omega_khz},
      {"lambda1", &Options::lambda1},
      {"lambda2", &Options::lambda2},
      {"eta", &Options::eta},
      {"mu", &Options::mu},
      {"chi", &Options::chi},
      {"tau-max", &Options::tau_max},
      {"steps", &Options::steps},
      {"grid", &Options::grid},
      {"target-en", &Options::target_en},
      {"mode", &Options::mode},
      {"decoherence", &Options::decoherence},
      {"mass-mg", &Options::mass_mg},
      {"density-gcc", &Options::density_gcc},
      {"separation-mm", &Options::separation_mm},
      {"pressure-pa", &Options::pressure_pa},
      {"temperature-k", &Options::temperature_k},
      {"radius-mm", &Options::radius_mm},
      {"pmax-radius-mm", &Options::pmax_radius_mm},
      {"gas-mass-kg", &Options::gas_mass_kg},
      {"omega-in-mhz", &Options::omega_in_mhz},
      {"wavelength-nm", &Options::wavelength_nm},
      {"transmittance", &Options::transmittance},
      {"detuning-ratio", &Options::detuning_ratio},
      {"power-lower-kw", &Options::power_lower_kw},
      {"power-upper-kw", &Options::power_upper_kw},
      {"a-lower-mm", &Options::a_lower_mm},
      {"a-upper-harmonic-mm", &Options::a_upper_harmonic_mm},
      {"a-upper-inverted-mm", &Options::a_upper_inverted_mm},
      {"gravity", &Options::gravity},
      {"format", &Options::format},
      {"jobs", &Options::jobs},
  };
  return table;
}

double read_number(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = kNaN;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty())
    throw InvalidParameter("input '" + key + "': not a number: '" + text + "'");
  return v;
}

RunRecord start(const std::string& command, const Options& o) {
  RunRecord r;
  r.command = command;
  r.version = GRAVENT_VERSION;
  r.inputs = o.to_inputs();
  return r;
}

struct Clock {
  std::chrono::steady_clock::time_point begin = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         begin)
        .count();
  }
};

void warn_if_perturbative(const SystemParams& s, RunRecord& r) {
  if (s.perturbative_warning())
    r.warnings.push_back(
        "eta or mu >= 0.1: first-order formulas are outside their range");
}

bool has_closed_form(const SystemParams& s) {
  return s.symmetric() && (s.chi() == 1.0 || s.lambda1() == -1.0);
}

double relative_error(double value, double reference) {
  if (std::isinf(value) && value == reference) return 0.0;
  return std::abs(value - reference) / std::abs(reference);
}

// One line of the budget: computed value against a reference with tolerance.
struct BudgetRow {
  std::string quantity;
  double value = kNaN;
  std::string unit;
  double reference = kNaN;
  double tolerance = kNaN;
  std::string status;
  std::string note;

  std::vector<Cell> cells() const {
    return {quantity, value, unit, reference, tolerance, status, note};
  }
};

template <typename F>
BudgetRow checked(const std::string& quantity, const std::string& unit,
                  double reference, double tolerance, F compute) {
  BudgetRow row{quantity, kNaN, unit, reference, tolerance, "", ""};
  try {
    row.value = compute();
    if (std::isfinite(tolerance))
      row.status =
          relative_error(row.value, reference) <= tolerance ? "PASS" : "FAIL";
  } catch (const Error& e) {
    row.status = "ERROR";
    row.note = e.what();
  }
  return row;
}

}  // namespace

SystemParams Options::system() const {
  return SystemParams(omega_khz * units::kHz, lambda1, lambda2, eta, mu, chi);
}

std::vector<std::pair<std::string, std::string>> Options::to_inputs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, member] : fields()) {
    std::visit(
        [&, &key = name](auto ptr) {
          const auto& v = this->*ptr;
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::string>)
            out.emplace_back(key, v);
          else if constexpr (std::is_same_v<T, bool>)
            out.emplace_back(key, v ? "true" : "false");
          else if constexpr (std::is_same_v<T, double>)
            out.emplace_back(key, format_double(v));
          else
            out.emplace_back(key, std::to_string(v));
        },
        member);
  }
  return out;
}

void Options::apply(
    const std::vector<std::pair<std::string, std::string>>& inputs) {
  for (const auto& [key, text] : inputs) {
    bool known = false;
    for (const auto& [name, member] : fields()) {
      if (name != key) continue;
      known = true;
      std::visit(
          [&](auto ptr) {
            auto& v = this->*ptr;
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
              v = text;
            } else if constexpr (std::is_same_v<T, bool>) {
              if (text != "true" && text != "false")
                throw InvalidParameter("input '" + key + "': expected a bool");
              v = text == "true";
            } else if constexpr (std::is_same_v<T, double>) {
              v = read_number(key, text);
            } else {
              const double d = read_number(key, text);
              if (d != std::floor(d) || d < 0)
                throw InvalidParameter("input '" + key +
                                       "': expected a non-negative integer");
              v = static_cast<T>(d);
            }
          },
          member);
    }
    if (!known) throw InvalidParameter("unknown input '" + key + "'");
  }
}

SweepSpec sweep_from(const Options& o, SweepKind kind,
                     const std::string& default_grid) {
  SweepSpec spec;
  spec.kind = kind;
  spec.grid = parse_grid(o.grid.empty() ? default_grid : o.grid);
  spec.fixed = {{"omega_khz", o.omega_khz}, {"lambda1", o.lambda1},
                {"lambda2", o.lambda2},     {"eta", o.eta},
                {"mu", o.mu},               {"chi", o.chi},
                {"tau", o.tau_max}};
  spec.output_format = parse_format(o.format);
  spec.parallelism = o.jobs;
  spec.validate();
  return spec;
}

RunRecord cmd_trace(const Options& o) {
  const Clock clock;
  if (o.steps < 2) throw InvalidParameter("trace: steps must be >= 2");
  if (!(o.tau_max > 0.0) || !std::isfinite(o.tau_max))
    throw InvalidParameter("trace: tau-max must be > 0");
  if (o.jobs == 0) throw InvalidParameter("trace: jobs must be >= 1");
  parse_format(o.format);
  const SystemParams s = o.system();

  RunRecord r = start("trace", o);
  warn_if_perturbative(s, r);
  const bool closed = has_closed_form(s);
  if (!closed)
    r.warnings.push_back(
        "no closed form for these parameters: perturbative columns are nan");
  r.columns = {"tau", "en_numeric", "en_perturbative", "f_gra", "f_dec",
               "error"};

  const int last = o.steps - 1;
  r.rows = parallel_map(o.steps, o.jobs, [&](std::size_t i) {
    const double tau =
        i == static_cast<std::size_t>(last) ? o.tau_max : o.tau_max * i / last;
    std::vector<Cell> row = {tau, kNaN, kNaN, kNaN, kNaN, std::string()};
    try {
      row[1] = negativity_numeric(s, tau).log_negativity;
      if (closed) {
        const FunctionPair f = curve_for(s).evaluate(tau);
        row[2] = negativity_perturbative(s, tau);
        row[3] = f.f_gra;
        row[4] = f.f_dec;
      }
    } catch (const Error& e) {
      row[5] = std::string(e.what());
    }
    return row;
  });
  r.wall_clock_s = clock.seconds();
  return r;
}

RunRecord cmd_contour(const Options& o) {
  const Clock clock;
  SweepSpec spec = sweep_from(o, SweepKind::Custom, kDefaultContourGrid);
  if (spec.grid.size() == 2 && spec.grid[0].name == "lambda1" &&
      spec.grid[1].name == "lambda2")
    spec.kind = SweepKind::ContourLambda;

  RunRecord r = start("contour", o);
  warn_if_perturbative(o.system(), r);
  for (const Axis& a : spec.grid) r.columns.push_back(a.name);
  for (const char* c : {"en", "deviation", "nu_min", "error"})
    r.columns.push_back(c);

  const auto points = grid_points(spec.grid);
  r.rows = parallel_map(points.size(), spec.parallelism, [&](std::size_t i) {
    std::vector<Cell> row(points[i].begin(), points[i].end());
    try {
      double tau = 0.0;
      const SystemParams s = params_at(spec, points[i], &tau);
      const auto n = negativity_numeric(s, tau);
      row.insert(row.end(), {n.log_negativity, n.deviation, n.nu_min,
                             std::string()});
    } catch (const Error& e) {
      row.insert(row.end(), {kNaN, kNaN, kNaN, std::string(e.what())});
    }
    return row;
  });
  r.wall_clock_s = clock.seconds();
  return r;
}

RunRecord cmd_tau_ent(const Options& o) {
  const Clock clock;
  const bool want_asymptotic = o.mode == "asymptotic" || o.mode == "both";
  const bool want_numeric = o.mode == "numeric" || o.mode == "both";
  if (!want_asymptotic && !want_numeric)
    throw InvalidParameter("tau-ent: mode must be asymptotic, numeric or both");
  if (o.jobs == 0) throw InvalidParameter("tau-ent: jobs must be >= 1");
  parse_format(o.format);

  // Without --decoherence the numeric search also runs at μ = 0, so both
  // modes answer the same question.
  auto numeric_params = [&](const SystemParams& s) {
    return o.decoherence ? s : s.with_coupling(s.eta(), 0.0);
  };

  RunRecord r = start("tau-ent", o);
  warn_if_perturbative(o.system(), r);

  if (o.grid.empty()) {
    const SystemParams s = o.system();
    r.columns = {"mode", "tau_ent_s", "tau_ent_dimensionless"};
    if (want_asymptotic) {
      const double t = tau_ent(s, o.target_en, o.decoherence);
      r.rows.push_back({std::string("asymptotic"), t, t * s.omega()});
    }
    if (want_numeric) {
      const double t = tau_ent_numeric(numeric_params(s), o.target_en);
      r.rows.push_back({std::string("numeric"), t, t * s.omega()});
    }
    r.wall_clock_s = clock.seconds();
    return r;
  }

  const SweepSpec spec = sweep_from(o, SweepKind::TauEntScan, "");
  for (const Axis& a : spec.grid) {
    if (a.name == "tau")
      throw InvalidParameter("tau-ent: 'tau' cannot be a grid axis");
    r.columns.push_back(a.name);
  }
  for (const char* c : {"tau_asymptotic_s", "tau_numeric_s", "error"})
    r.columns.push_back(c);

  const auto points = grid_points(spec.grid);
  r.rows = parallel_map(points.size(), spec.parallelism, [&](std::size_t i) {
    std::vector<Cell> row(points[i].begin(), points[i].end());
    double asymptotic = kNaN, numeric = kNaN;
    std::string error;
    try {
      const SystemParams s = params_at(spec, points[i], nullptr);
      if (want_asymptotic) asymptotic = tau_ent(s, o.target_en, o.decoherence);
      if (want_numeric)
        numeric = tau_ent_numeric(numeric_params(s), o.target_en);
    } catch (const Error& e) {
      error = e.what();
    }
    row.insert(row.end(), {asymptotic, numeric, error});
    return row;
  });
  r.wall_clock_s = clock.seconds();
  return r;
}

RunRecord cmd_budget(const Options& o) {
  const Clock clock;
  parse_format(o.format);
  const Constants& k = codata2018;
  const double omega = o.omega_khz * units::kHz;
  const double mass = o.mass_mg * units::mg;
  const double mass_ratio = o.mass_mg / 0.1;
  const double separation =
      o.separation_mm > 0.0
          ? o.separation_mm * units::mm
          : std::cbrt(mass / (o.density_gcc * units::g_per_cm3));
  const double density_gcc =
      mass / std::pow(separation, 3) / units::g_per_cm3;
  const double radius = o.radius_mm * units::mm;
  const double omega_in = o.omega_in_mhz * units::MHz;
  const double laser = units::laser_angular_frequency(o.wavelength_nm * units::nm, k.c);
  const double p_lower = o.power_lower_kw * units::kW;
  const double a_lower = o.a_lower_mm * units::mm;
  const double sqrt_t = std::sqrt(o.temperature_k);
  const double p17 = o.pressure_pa / 1e-17;
  const double r02 = o.radius_mm / 0.2;

  RunRecord r = start("budget", o);
  r.columns = {"quantity", "value",  "unit", "reference",
               "tolerance", "status", "note"};
  std::vector<BudgetRow> rows;

  const EnvironmentParams env{o.pressure_pa, o.temperature_k, radius, mass,
                              o.gas_mass_kg, omega};

  rows.push_back(checked("eta", "", 2.7e-13 / (o.omega_khz * o.omega_khz) *
                                        density_gcc / 2.0,
                         0.02, [&] {
                           return eta_from_physical({mass, separation, omega}, k);
                         }));
  const double eta = rows.back().value;

  rows.push_back(checked("tau_ent_inverted", "s", 1.3e-2 / o.omega_khz, 0.03,
                         [&] {
                           return tau_ent(SystemParams(omega, -1, -1, eta, 0),
                                          o.target_en, false);
                         }));
  const double tau_ent_inverted = rows.back().value;
  rows.push_back(checked("tau_ent_free", "s", 4.2 / std::cbrt(o.omega_khz),
                         0.03, [&] {
                           return tau_ent(SystemParams(omega, 0, 0, eta, 0),
                                          o.target_en, false);
                         }));

  rows.push_back(checked("mu_air", "",
                         4e-13 / (o.omega_khz * o.omega_khz) * p17 * sqrt_t *
                             r02 * r02,
                         0.05, [&] { return mu_air(env, k); }));
  const double mu_air_value = rows.back().value;
  if (mass_ratio != 1.0)
    rows.back().note = "reference does not scale with mass";

  rows.push_back(checked(
      "tau_air", "s",
      o.pressure_pa == 0.0 ? std::numeric_limits<double>::infinity()
                           : 0.64 / (r02 * r02) / p17 * sqrt_t,
      0.05, [&] { return tau_air(env, k); }));
  const double tau_air_value = rows.back().value;

  rows.push_back(checked(
      "p_max", "Pa",
      5.3e-16 * o.omega_khz / std::pow(o.pmax_radius_mm / 0.1, 2) * sqrt_t,
      0.10, [&] {
        EnvironmentParams e = env;
        e.radius = o.pmax_radius_mm * units::mm;
        return max_pressure(e, tau_ent_inverted, k);
      }));

  // Detuned cavity with |Δ|/κ = detuning_ratio, run at its own optical
  // spring frequency.
  rows.push_back(checked("mu_shot_detuned", "", kNaN, kNaN, [&] {
    const double length = 0.01;
    const double kappa = o.transmittance * k.c / (4.0 * length);
    const CavityParams cav{laser, -o.detuning_ratio * kappa, kappa, length,
                           o.transmittance, 1.0, mass};
    const double w2 = optical_spring_detuned(cav, intracavity_power(cav), k);
    return mu_shot_detuned(cav, std::sqrt(std::abs(w2)), k);
  }));
  rows.back().note = "general formula at omega = |omega_opt|";
  const double mu_detuned = rows.back().value;
  rows.push_back(checked("mu_shot_reduced", "", kNaN, kNaN, [&] {
    return mu_shot_reduced(-o.detuning_ratio, 1.0);
  }));
  rows.back().note = "kappa/|Delta|";

  rows.push_back(checked(
      "delta_x", "m",
      0.3e-12 * std::pow(o.omega_khz, 1.5) / std::sqrt(mass_ratio) /
          o.omega_in_mhz,
      0.20, [&] {
        return wavefunction_spread_at_entanglement(mass, omega, omega_in, eta,
                                                   o.target_en, k);
      }));
  const double delta_x = rows.back().value;

  SandwichGeometry inverted{mass, p_lower, 0.0, a_lower,
                            o.a_upper_inverted_mm * units::mm, o.gravity};
  rows.push_back(checked("omega_hor_sq", "rad^2/s^2",
                         -1e6 / mass_ratio * (o.power_lower_kw / 30.0) /
                             (o.a_lower_mm / 2.0),
                         0.05, [&] {
                           return horizontal_frequency_sq_approx(inverted, k);
                         }));
  rows.back().note = "upper cavity and gravity dropped";
  const double omega_hor_sq = rows.back().value;

  const CavityParams sandwich_cavity{laser, 0.0, 1.0, 1.0, o.transmittance,
                                     0.0, mass};
  rows.push_back(checked("mu_shot_hor", "", 2.5e-14, 0.25, [&] {
    return mu_shot_horizontal(inverted, sandwich_cavity, delta_x,
                              std::sqrt(std::abs(omega_hor_sq)), k);
  }));
  rows.back().note = "upper bound of the (delta_x/a_L)^2 suppression";
  const double mu_hor = rows.back().value;
  rows.push_back(checked("mu_shot_hor_reduced", "", kNaN, kNaN, [&] {
    return mu_shot_horizontal_reduced(inverted, sandwich_cavity, delta_x, k);
  }));

  // Verdicts.
  BudgetRow quiet{"mu_air_below_eta", mu_air_value / eta, "ratio", kNaN, kNaN,
                  "", ""};
  quiet.status = mu_air_value < eta ? "PASS" : "FAIL";
  BudgetRow rare{"tau_air_exceeds_tau_ent", tau_air_value / tau_ent_inverted,
                 "ratio", kNaN, kNaN, "", ""};
  rare.status = tau_air_value > tau_ent_inverted ? "PASS" : "FAIL";
  if (mu_air_value < eta)
    quiet.note = "gas decoherence is below gravity";
  else
    quiet.note = std::string("decoherence-dominated unless tau_air > tau_ent") +
                 (rare.status == "PASS" ? "; satisfied" : "; not satisfied");
  BudgetRow order{"hierarchy_mu_hor_eta_mu_detuned", kNaN, "", kNaN, kNaN,
                  (mu_hor < eta && eta < mu_detuned) ? "PASS" : "FAIL",
                  "mu_shot_hor < eta < mu_shot_detuned"};
  rows.push_back(quiet);
  rows.push_back(rare);
  rows.push_back(order);

  for (const auto& row : rows) r.rows.push_back(row.cells());
  r.wall_clock_s = clock.seconds();
  return r;
}

RunRecord cmd_design_check(const Options& o) {
  const Clock clock;
  parse_format(o.format);
  const Constants& k = codata2018;
  const double mass = o.mass_mg * units::mg;
  const double p_lower = o.power_lower_kw * units::kW;
  const double p_upper = o.power_upper_kw < 0.0
                             ? p_lower - mass * o.gravity * k.c / 2.0
                             : o.power_upper_kw * units::kW;
  if (p_upper < 0.0)
    throw InvalidParameter(
        "design-check: lower power too small to levitate the mirror");
  const SandwichGeometry harmonic{mass, p_lower, p_upper,
                                  o.a_lower_mm * units::mm,
                                  o.a_upper_harmonic_mm * units::mm, o.gravity};
  SandwichGeometry inverted = harmonic;
  inverted.a_upper = o.a_upper_inverted_mm * units::mm;

  const SwitchabilityReport rep = switchability_check(harmonic, inverted, k);
  RunRecord r = start("design-check", o);
  r.columns = {"quantity", "value", "unit", "status"};
  auto flag = [](bool b) { return std::string(b ? "PASS" : "FAIL"); };
  auto add = [&](const std::string& q, double v, const std::string& unit,
                 const std::string& status) {
    r.rows.push_back({q, v, unit, status});
  };
  add("power_upper", p_upper, "W", "");
  add("omega_sq_harmonic", rep.omega_sq_harmonic, "rad^2/s^2",
      flag(rep.harmonic_is_trap));
  add("omega_sq_inverted", rep.omega_sq_inverted, "rad^2/s^2",
      flag(rep.inverted_is_unstable));
  add("omega_sq_inverted_balanced_route",
      horizontal_frequency_sq_balanced(inverted, k), "rad^2/s^2", "");
  add("omega_sq_inverted_approx", horizontal_frequency_sq_approx(inverted, k),
      "rad^2/s^2", "");
  add("approximation_gap", rep.approximation_gap, "rad^2/s^2", "");
  add("lower_power_coefficient_inverted", lower_power_coefficient(inverted, k),
      "rad^2/(s^2 W)", flag(lower_power_coefficient(inverted, k) < 0.0));
  add("residual_harmonic", rep.residual_harmonic, "N", flag(rep.balanced));
  add("residual_inverted", rep.residual_inverted, "N", flag(rep.balanced));
  add("geometry_ordered", rep.geometry_ordered ? 1.0 : 0.0, "",
      flag(rep.geometry_ordered));
  add("switchable", rep.switchable ? 1.0 : 0.0, "", flag(rep.switchable));
  r.wall_clock_s = clock.seconds();
  return r;
}

RunRecord run_command(const std::string& command, const Options& o) {
  if (command == "trace") return cmd_trace(o);
  if (command == "contour") return cmd_contour(o);
  if (command == "tau-ent") return cmd_tau_ent(o);
  if (command == "budget") return cmd_budget(o);
  if (command == "design-check") return cmd_design_check(o);
  throw InvalidParameter("unknown command '" + command + "'");
}

double max_relative_difference(const RunRecord& a, const RunRecord& b) {
  const double inf = std::numeric_limits<double>::infinity();
  if (a.columns != b.columns || a.rows.size() != b.rows.size()) return inf;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].size() != b.rows[i].size()) return inf;
    for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
      const Cell& x = a.rows[i][j];
      const Cell& y = b.rows[i][j];
      if (x.index() != y.index()) return inf;
      if (const auto* dx = std::get_if<double>(&x)) {
        const double dy = std::get<double>(y);
        if (std::isnan(*dx) && std::isnan(dy)) continue;
        if (*dx == dy) continue;
        const double scale = std::max(std::abs(*dx), std::abs(dy));
        if (!std::isfinite(scale)) return inf;
        worst = std::max(worst, std::abs(*dx - dy) / scale);
      } else if (std::get<std::string>(x) != std::get<std::string>(y)) {
        return inf;
      }
    }
  }
  return worst;
}

}  // namespace gravent::cli

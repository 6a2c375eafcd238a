#include "gravent/decoherence.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gravent/analytic.hpp"
#include "gravent/core_model.hpp"
#include "gravent/errors.hpp"

namespace gravent {

namespace {

double lorentzian(const CavityParams& c) {
  const double r = c.detuning / c.decay_rate;
  return 1.0 + r * r;
}

double normalized_detuning(double detuning, double decay_rate) {
  if (!(decay_rate > 0.0) || !std::isfinite(decay_rate))
    throw InvalidParameter("decay rate must be > 0");
  if (detuning == 0.0 || !std::isfinite(detuning))
    throw DomainError("shot-noise reduction is singular at zero detuning");
  return std::abs(detuning / decay_rate);
}

}  // namespace

double mu_air(const EnvironmentParams& e, const Constants& k) {
  validate(e);
  const double r2 = e.radius * e.radius;
  return 16.0 * e.pressure * r2 / (3.0 * k.hbar * e.mass * e.omega * e.omega) *
         std::sqrt(2.0 * std::numbers::pi * e.gas_molecule_mass * k.k_B *
                   e.temperature);
}

double tau_air(const EnvironmentParams& e, const Constants& k) {
  validate(e);
  if (e.pressure == 0.0) return std::numeric_limits<double>::infinity();
  const double kt = k.k_B * e.temperature;
  const double density = e.pressure / kt;
  const double speed = std::sqrt(kt / e.gas_molecule_mass);
  return 1.0 / (std::numbers::pi * e.radius * e.radius * speed * density);
}

double max_pressure(const EnvironmentParams& e, double tau_required,
                    const Constants& k) {
  EnvironmentParams probe = e;
  probe.pressure = 0.0;
  validate(probe);
  if (!(tau_required > 0.0) || !std::isfinite(tau_required))
    throw InvalidParameter("max_pressure: tau_required must be > 0");
  return std::sqrt(k.k_B * e.temperature * e.gas_molecule_mass) /
         (std::numbers::pi * e.radius * e.radius * tau_required);
}

double intracavity_power(const CavityParams& c) {
  validate(c);
  return 4.0 * c.input_power / (c.input_transmittance * lorentzian(c));
}

double shot_noise_psd(const CavityParams& c, double p_cav, const Constants& k) {
  validate(c);
  if (!(p_cav >= 0.0)) throw InvalidParameter("shot_noise_psd: p_cav < 0");
  return 32.0 * k.hbar * c.laser_angular_frequency * p_cav /
         (k.c * k.c * c.input_transmittance * lorentzian(c));
}

double shot_noise_psd_from_fluctuation(const CavityParams& c, double p_cav,
                                       const Constants& k) {
  validate(c);
  if (!(p_cav >= 0.0))
    throw InvalidParameter("shot_noise_psd_from_fluctuation: p_cav < 0");
  if (c.input_power == 0.0) return 0.0;
  const double fluctuation =
      std::sqrt(2.0 * k.hbar * c.laser_angular_frequency * c.input_power) *
      p_cav / c.input_power;
  const double force = 2.0 * fluctuation / k.c;
  return force * force;
}

double mu_shot_detuned(const CavityParams& c, double omega,
                       const Constants& k) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw InvalidParameter("mu_shot_detuned: omega must be > 0");
  const double p_cav = intracavity_power(c);
  return 16.0 * c.laser_angular_frequency * p_cav /
         (omega * omega * c.mirror_mass * k.c * k.c * c.input_transmittance *
          lorentzian(c));
}

double mu_shot_reduced(double detuning, double decay_rate) {
  return 1.0 / normalized_detuning(detuning, decay_rate);
}

double mu_shot_substituted(double detuning, double decay_rate) {
  const double r = normalized_detuning(detuning, decay_rate);
  return r + 1.0 / r;
}

double wavefunction_spread(double mass, double omega_in, double tau,
                           const Constants& k) {
  if (!(mass > 0.0) || !(omega_in > 0.0) || !std::isfinite(tau))
    throw InvalidParameter(
        "wavefunction_spread: mass and omega_in must be > 0, tau finite");
  return std::exp(tau) * std::sqrt(k.hbar / (2.0 * mass * omega_in));
}

double wavefunction_spread_at_entanglement(double mass, double omega,
                                           double omega_in, double eta,
                                           double target, const Constants& k) {
  if (!(omega > 0.0) || !(omega_in > 0.0))
    throw InvalidParameter("wavefunction_spread: frequencies must be > 0");
  const SystemParams s(omega, -1.0, -1.0, eta, 0.0, omega_in / omega);
  return wavefunction_spread(mass, omega_in,
                             tau_ent_dimensionless(s, target, false), k);
}

double mu_shot_horizontal(const SandwichGeometry& g, const CavityParams& c,
                          double delta_x, double omega, const Constants& k) {
  validate(g);
  validate(c);
  if (!(delta_x >= 0.0) || !(omega > 0.0))
    throw InvalidParameter("mu_shot_horizontal: delta_x >= 0 and omega > 0");
  const double ratio = delta_x / g.a_lower;
  if (ratio > 0.01)
    throw ApproximationInvalid(
        "mu_shot_horizontal: delta_x/a_L exceeds 0.01");
  return 16.0 * c.laser_angular_frequency * g.power_lower /
         (g.mirror_mass * omega * omega * k.c * k.c * c.input_transmittance) *
         ratio * ratio;
}

double mu_shot_horizontal_reduced(const SandwichGeometry& g,
                                  const CavityParams& c, double delta_x,
                                  const Constants& k) {
  validate(g);
  validate(c);
  if (!(delta_x >= 0.0))
    throw InvalidParameter("mu_shot_horizontal: delta_x must be >= 0");
  if (delta_x / g.a_lower > 0.01)
    throw ApproximationInvalid(
        "mu_shot_horizontal: delta_x/a_L exceeds 0.01");
  return 8.0 * c.laser_angular_frequency * delta_x * delta_x /
         (k.c * g.a_lower * c.input_transmittance);
}

}  // namespace gravent

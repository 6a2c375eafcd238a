#include "gravent/design.hpp"

#include <cmath>

#include "gravent/errors.hpp"

namespace gravent {

double optical_spring_detuned(const CavityParams& c, double p_cav,
                              const Constants& k) {
  validate(c);
  if (!(p_cav >= 0.0))
    throw InvalidParameter("optical_spring_detuned: p_cav must be >= 0");
  const double r = c.detuning / c.decay_rate;
  const double lorentz = 1.0 + r * r;
  return 4.0 * c.laser_angular_frequency * p_cav /
         (c.mirror_mass * k.c * c.cavity_length * c.decay_rate) * r /
         (lorentz * lorentz);
}

double levitation_balance(const SandwichGeometry& g, const Constants& k) {
  validate(g);
  return g.mirror_mass * g.gravity -
         2.0 / k.c * (g.power_lower - g.power_upper);
}

double horizontal_frequency_sq(const SandwichGeometry& g, const Constants& k) {
  validate(g);
  return 2.0 / (g.mirror_mass * k.c) *
         (g.power_upper / g.a_upper - g.power_lower / g.a_lower);
}

double lower_power_coefficient(const SandwichGeometry& g, const Constants& k) {
  validate(g);
  return 2.0 * (g.a_lower - g.a_upper) /
         (g.mirror_mass * k.c * g.a_upper * g.a_lower);
}

double horizontal_frequency_sq_balanced(const SandwichGeometry& g,
                                        const Constants& k) {
  return lower_power_coefficient(g, k) * g.power_lower - g.gravity / g.a_upper;
}

double horizontal_frequency_sq_approx(const SandwichGeometry& g,
                                      const Constants& k) {
  validate(g);
  return -2.0 * g.power_lower / (g.mirror_mass * k.c * g.a_lower);
}

SwitchabilityReport switchability_check(const SandwichGeometry& harmonic,
                                        const SandwichGeometry& inverted,
                                        const Constants& k) {
  validate(harmonic);
  validate(inverted);
  if (harmonic.mirror_mass != inverted.mirror_mass)
    throw InvalidParameter("switchability_check: mirror masses differ");
  if (harmonic.gravity != inverted.gravity)
    throw InvalidParameter("switchability_check: gravity differs");

  SwitchabilityReport r;
  r.omega_sq_harmonic = horizontal_frequency_sq(harmonic, k);
  r.omega_sq_inverted = horizontal_frequency_sq(inverted, k);
  r.residual_harmonic = levitation_balance(harmonic, k);
  r.residual_inverted = levitation_balance(inverted, k);
  r.approximation_gap =
      r.omega_sq_inverted - horizontal_frequency_sq_approx(inverted, k);

  const double weight = harmonic.mirror_mass * harmonic.gravity;
  r.harmonic_is_trap = r.omega_sq_harmonic > 0.0;
  r.inverted_is_unstable = r.omega_sq_inverted < 0.0;
  r.balanced = std::abs(r.residual_harmonic) < 1e-12 * weight &&
               std::abs(r.residual_inverted) < 1e-12 * weight;
  r.geometry_ordered = harmonic.a_upper < harmonic.a_lower &&
                       inverted.a_lower < inverted.a_upper;
  r.switchable = r.harmonic_is_trap && r.inverted_is_unstable && r.balanced &&
                 r.geometry_ordered;
  return r;
}

}  // namespace gravent

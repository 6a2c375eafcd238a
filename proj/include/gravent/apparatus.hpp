#pragma once

// Laboratory inputs in SI units: gas environment, optical cavity and the
// three-mirror levitation stack.

#include "gravent/units.hpp"

namespace gravent {

/// Residual gas around the oscillator. A pressure of exactly zero is allowed
/// and means no collisions at all.
struct EnvironmentParams {
  double pressure;     // Pa
  double temperature;  // K
  double radius;       // m
  double mass;         // kg
  double gas_molecule_mass = units::nitrogen_mass;  // kg
  double omega;        // rad/s
};

/// A driven Fabry-Pérot cavity acting on a mirror of mass `mirror_mass`.
/// Detuning Δ = ω_ℓ − ω_cav is negative for red detuning.
struct CavityParams {
  double laser_angular_frequency;  // rad/s
  double detuning;                 // rad/s
  double decay_rate;               // rad/s, amplitude decay κ
  double cavity_length;            // m
  double input_transmittance;      // (0, 1]
  double input_power;              // W
  double mirror_mass;              // kg
};

/// Levitated mirror between a lower and an upper mirror.
struct SandwichGeometry {
  double mirror_mass;  // kg
  double power_lower;  // W, intracavity
  double power_upper;  // W, intracavity
  double a_lower;      // m, curvature-centre distance
  double a_upper;      // m
  double gravity = 9.81;  // m/s^2
};

/// Each throws InvalidParameter on the first field outside its domain.
void validate(const EnvironmentParams& e);
void validate(const CavityParams& c);
void validate(const SandwichGeometry& g);

}  // namespace gravent

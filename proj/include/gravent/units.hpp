#pragma once

// Unit table for the CLI boundary. Everything inside the library is SI.
//
// Frequencies quoted as "kHz" and "MHz" are angular: ω_kHz ≡ ω / 1 kHz is
// used directly, so 1 kHz maps to 1e3 rad/s and 1 MHz to 1e6 rad/s (no
// factor 2π). This is the convention that reproduces η = 2.7e-13 and
// Δx = 0.3 pm.

#include <numbers>

namespace gravent::units {

inline constexpr double kHz = 1e3;  // rad/s
inline constexpr double MHz = 1e6;  // rad/s
inline constexpr double mg = 1e-6;  // kg
inline constexpr double g = 1e-3;   // kg
inline constexpr double mm = 1e-3;  // m
inline constexpr double nm = 1e-9;  // m
inline constexpr double pm = 1e-12; // m
inline constexpr double kW = 1e3;   // W
inline constexpr double g_per_cm3 = 1e3;  // kg/m^3

/// Mass of a nitrogen molecule, 4.7e-23 g.
inline constexpr double nitrogen_mass = 4.7e-26;  // kg

/// Angular frequency of light with vacuum wavelength `wavelength` (m).
inline constexpr double laser_angular_frequency(double wavelength, double c) {
  return 2.0 * std::numbers::pi * c / wavelength;
}

}  // namespace gravent::units

#pragma once

namespace gravent {

/// Physical constants in SI units. Values are CODATA 2018 (c, ħ and k_B are
/// exact in the revised SI); `g_earth` is standard gravity.
struct Constants {
  double G = 6.67430e-11;        // m^3 kg^-1 s^-2
  double hbar = 1.054571817e-34; // J s
  double k_B = 1.380649e-23;     // J/K
  double c = 299792458.0;        // m/s
  double g_earth = 9.80665;      // m/s^2
};

inline constexpr Constants codata2018{};

}  // namespace gravent

#pragma once

// Optomechanical stiffness of a detuned cavity and of the levitated sandwich
// mirror, and the check that one stack can be switched from a trap to an
// inverted potential.

#include "gravent/apparatus.hpp"
#include "gravent/constants.hpp"

namespace gravent {

/// Signed ω_opt² = 4ω_ℓP_cav/(mcLκ) · (Δ/κ)/[1 + (Δ/κ)²]². Negative (an
/// anti-spring) for red detuning.
double optical_spring_detuned(const CavityParams& c, double p_cav,
                              const Constants& k = codata2018);

/// mg − (2/c)(P_L − P_U). Zero when the mirror floats.
double levitation_balance(const SandwichGeometry& g,
                          const Constants& k = codata2018);

/// ω²_hor = (2/mc)(P_U/a_U − P_L/a_L), directly from both powers.
double horizontal_frequency_sq(const SandwichGeometry& g,
                               const Constants& k = codata2018);

/// 2(a_L − a_U)P_L/(mca_Ua_L) − g/a_U, i.e. with P_U eliminated through the
/// levitation balance. Agrees with horizontal_frequency_sq only when
/// levitation_balance(g) = 0.
double horizontal_frequency_sq_balanced(const SandwichGeometry& g,
                                        const Constants& k = codata2018);

/// −2P_L/(mca_L): the upper cavity and gravity dropped.
double horizontal_frequency_sq_approx(const SandwichGeometry& g,
                                      const Constants& k = codata2018);

/// Coefficient of P_L in the balanced form, 2(a_L − a_U)/(mca_Ua_L).
double lower_power_coefficient(const SandwichGeometry& g,
                               const Constants& k = codata2018);

struct SwitchabilityReport {
  double omega_sq_harmonic;
  double omega_sq_inverted;
  double residual_harmonic;  // N
  double residual_inverted;  // N
  /// horizontal_frequency_sq − horizontal_frequency_sq_approx for the
  /// inverted stack: what the approximate form leaves out.
  double approximation_gap;
  bool harmonic_is_trap;
  bool inverted_is_unstable;
  bool balanced;
  /// a_U1 < a_L < a_U2.
  bool geometry_ordered;
  bool switchable;
};

/// Compares a trapping and an inverting configuration of the same mirror.
/// Throws InvalidParameter when masses or gravity differ.
SwitchabilityReport switchability_check(const SandwichGeometry& harmonic,
                                        const SandwichGeometry& inverted,
                                        const Constants& k = codata2018);

}  // namespace gravent

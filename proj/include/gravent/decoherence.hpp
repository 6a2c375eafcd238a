#pragma once

// Decoherence strengths μ from gas collisions and photon shot noise, all in
// the normalization μ = S_F/(2ħmω²) of a white force noise with one-sided
// spectral density S_F.

#include "gravent/apparatus.hpp"
#include "gravent/constants.hpp"

namespace gravent {

/// μ_air = 16pR²/(3ħmω²)·√(2π m_gas k_B T).
double mu_air(const EnvironmentParams& e, const Constants& k = codata2018);

/// Mean time between molecule hits, (πR² v n)⁻¹ with n = p/(k_B T) and
/// v = √(k_B T/m_gas). Infinite at zero pressure.
double tau_air(const EnvironmentParams& e, const Constants& k = codata2018);

/// Pressure at which tau_air equals `tau_required` seconds. `e.pressure` is
/// ignored.
double max_pressure(const EnvironmentParams& e, double tau_required,
                    const Constants& k = codata2018);

/// P_cav = 4P_in/(T_in[1 + (Δ/κ)²]).
double intracavity_power(const CavityParams& c);

/// One-sided force PSD 32ħω_ℓP_cav/(c²T_in[1 + (Δ/κ)²]).
double shot_noise_psd(const CavityParams& c, double p_cav,
                      const Constants& k = codata2018);

/// The same PSD as (2δP_cav/c)² with δP_cav = √(2ħω_ℓP_in)·P_cav/P_in.
/// Equals shot_noise_psd when p_cav = intracavity_power(c).
double shot_noise_psd_from_fluctuation(const CavityParams& c, double p_cav,
                                       const Constants& k = codata2018);

/// μ_shot = 16ω_ℓP_cav/(ω²mc²T_in[1 + (Δ/κ)²]) with P_cav from
/// intracavity_power(c), for mechanical frequency `omega`.
double mu_shot_detuned(const CavityParams& c, double omega,
                       const Constants& k = codata2018);

/// The commonly quoted reduced value κ/|Δ|. Throws DomainError at Δ = 0.
double mu_shot_reduced(double detuning, double decay_rate);

/// What mu_shot_detuned actually reduces to once ω = |ω_opt| and
/// T_in = 4Lκ/c are substituted: (1 + r²)/|r| with r = Δ/κ.
/// Throws DomainError at Δ = 0.
double mu_shot_substituted(double detuning, double decay_rate);

/// Position spread e^{τ}·√(ħ/(2mω_in)) of an inverted oscillator released
/// from the ground state of a trap at ω_in, after dimensionless time τ.
double wavefunction_spread(double mass, double omega_in, double tau,
                           const Constants& k = codata2018);

/// wavefunction_spread at the λ = −1 entanglement time for χ = ω_in/ω,
/// coupling η and target E_N.
double wavefunction_spread_at_entanglement(double mass, double omega,
                                           double omega_in, double eta,
                                           double target,
                                           const Constants& k = codata2018);

/// Horizontal shot-noise decoherence of the levitated mirror, suppressed by
/// (Δx/a_L)²: 16ω_ℓP_L/(mω²c²T_in)·(Δx/a_L)². Only the upper-bound case of
/// the suppression is computed. Throws ApproximationInvalid when
/// Δx/a_L > 0.01.
double mu_shot_horizontal(const SandwichGeometry& g, const CavityParams& c,
                          double delta_x, double omega,
                          const Constants& k = codata2018);

/// The same with ω² ≈ 2P_L/(mca_L) substituted: 8ω_ℓΔx²/(c a_L T_in).
double mu_shot_horizontal_reduced(const SandwichGeometry& g,
                                  const CavityParams& c, double delta_x,
                                  const Constants& k = codata2018);

}  // namespace gravent

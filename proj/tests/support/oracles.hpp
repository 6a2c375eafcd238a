#pragma once

// Reference computations used only by the tests. Each one reaches its answer
// by a different route than the library: Taylor series instead of Padé,
// adaptive quadrature instead of the augmented exponential, complex
// arithmetic on the trigonometric forms instead of the real
// cancellation-free rewrite.

#include <random>

#include "gravent/scalar.hpp"

namespace oracle {

using gravent::Matrix2;
using gravent::Matrix4;

/// e^M by a Taylor series on M/2^s (‖M/2^s‖ ≤ 1/4) followed by s squarings,
/// in binary128.
Matrix4<gravent::quad> series_exp(const Matrix4<gravent::quad>& m);
Matrix4<double> series_exp(const Matrix4<double>& m);

/// ∫₀ᵗ e^{-Ks} D e^{-Kᵀs} ds entrywise by adaptive Gauss-Kronrod.
Matrix4<double> noise_integral_quadrature(const Matrix4<double>& k,
                                          const Matrix4<double>& d, double t);

/// σ(τ) of dσ/dt = Kσ + σKᵀ + D from Wσ₀Wᵀ + W(∫...)Wᵀ with the two oracles
/// above (ω = 1).
Matrix4<double> covariance_by_quadrature(const Matrix4<double>& k,
                                         const Matrix4<double>& d,
                                         const Matrix4<double>& sigma0,
                                         double t);

/// The full trigonometric f_gra and f_dec in their sin/cos form, evaluated with
/// complex arithmetic (√λ imaginary for λ < 0). Magnitude returned.
double f_gra_trig(double lambda, double tau);
double f_dec_trig(double lambda, double tau);
/// The sinh/cosh χ-dependent forms for λ = −1.
double f_gra_chi_trig(double chi, double tau);
double f_dec_chi_trig(double chi, double tau);

/// Two-mode squeezed vacuum with squeezing r.
Matrix4<double> two_mode_squeezed(double r);

/// e^{ΩH} for a random symmetric H with entries of size `scale`: a random
/// element of Sp(4, ℝ).
Matrix4<double> random_symplectic(std::mt19937_64& rng, double scale);

/// Local symplectic S₁ ⊕ S₂ with det Sᵢ = 1.
Matrix4<double> random_local_symplectic(std::mt19937_64& rng);

/// S diag(ν₁, ν₁, ν₂, ν₂) Sᵀ for a random symplectic S.
Matrix4<double> random_state(std::mt19937_64& rng, double nu1, double nu2,
                             double scale);

/// Ω = diag(J, J), J = [[0, 1], [−1, 0]].
Matrix4<double> symplectic_form();

}  // namespace oracle

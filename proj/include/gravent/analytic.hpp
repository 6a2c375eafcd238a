#pragma once

// First-order (in η, μ) closed forms for the entanglement of two identical
// oscillators, and entanglement-time solvers.
//
// To first order the partially transposed state has
//   ½ − ν̃_min = η f_gra(τ) − μ f_dec(τ),
// and the usual estimate of the log negativity is E_N ≃ 3(η f_gra − μ f_dec).
// Expanding −log₂(1 − 2δ) instead gives the coefficient 2/ln 2 ≈ 2.885, so the
// factor 3 is a rounded value. `negativity_perturbative` keeps the quoted 3;
// `deviation_first_order` exposes the bare δ for exact comparisons.
//
// f_gra and f_dec are written here in a form that is real and free of
// cancellation for every λ, including λ → 0:
//   g(λ, τ) = 4τ³ h(4λτ²),   h(y) = (1 − sin√y/√y)/y,
//   S(λ, τ) = sin²(√λ τ)/λ,
//   f_gra = ¼ √((2τ − (1+λ) g)² + 4 S²),   f_dec = ¼ (2τ + (1−λ) g),
// with sin → sinh for λ < 0. These are algebraically identical to the full
// trigonometric expressions.

#include <optional>

#include "gravent/core_model.hpp"
#include "gravent/entanglement.hpp"

namespace gravent {

struct FunctionPair {
  double f_gra;
  double f_dec;
};

/// f_gra for a common spring constant λ ≠ 0. Throws DomainError at λ = 0
/// (use f_free) and InvalidParameter for τ < 0.
double f_gra_full(double lambda, double tau);

/// f_dec for λ ≠ 0, same contract as f_gra_full.
double f_dec_full(double lambda, double tau);

/// The λ = 0 limit: f_gra = (τ/6)√(τ⁴ + 3τ² + 9), f_dec = τ(τ² + 3)/6.
FunctionPair f_free(double tau);

/// Inverted oscillators (λ = −1) started in the ground state of a trap χ
/// times stiffer than the evolution frequency.
FunctionPair f_inverted_chi(double chi, double tau);

/// f_gra and f_dec for one (λ, χ) pair. λ = 0 and λ ≠ 0 are dispatched to the
/// appropriate closed form; χ ≠ 1 is only available for λ = −1.
class PerturbativeCurve {
 public:
  /// Throws Unsupported when chi ≠ 1 and lambda ≠ −1.
  PerturbativeCurve(double lambda, double chi = 1.0);

  double lambda() const noexcept { return lambda_; }
  double chi() const noexcept { return chi_; }

  double f_gra(double tau) const { return evaluate(tau).f_gra; }
  double f_dec(double tau) const { return evaluate(tau).f_dec; }
  FunctionPair evaluate(double tau) const;

 private:
  double lambda_;
  double chi_;
};

/// The curve selected by a parameter set. Throws Unsupported when λ₁ ≠ λ₂.
PerturbativeCurve curve_for(const SystemParams& s);

/// η f_gra − μ f_dec, the first-order value of ½ − ν̃_min.
double deviation_first_order(const SystemParams& s, double tau);

/// max(0, 3(η f_gra − μ f_dec)).
double negativity_perturbative(const SystemParams& s, double tau);

/// Full numeric E_N at τ from the exact propagator, evaluated in binary128.
NegativityResult<double> negativity_numeric(const SystemParams& s, double tau);

/// Dimensionless entanglement time from the long-time asymptotes
///   λ = −1: 3η (χ²+1) e^{2τ}/(16χ) = target,   λ = 0: η τ³/2 = target.
/// With decoherence η is replaced by η − μ, since f_gra ≈ f_dec at long times.
double tau_ent_dimensionless(const SystemParams& s, double target,
                             bool include_decoherence);

/// tau_ent_dimensionless converted to seconds.
double tau_ent(const SystemParams& s, double target, bool include_decoherence);

struct TauEntSearch {
  double tau_start = 1e-3;
  double tau_cap = 60.0;
  /// Samples inside the first bracket, so the earliest crossing is found
  /// when E_N oscillates.
  int scan_points = 32;
  double relative_tolerance = 1e-6;
  int max_bisections = 400;
};

/// First τ/ω (seconds) at which the numeric E_N reaches `target`. Throws
/// NoEntanglement carrying the largest E_N seen if there is no crossing
/// within the search window.
double tau_ent_numeric(const SystemParams& s, double target,
                       const TauEntSearch& search = {});

}  // namespace gravent

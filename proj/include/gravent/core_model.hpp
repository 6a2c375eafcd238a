#pragma once

// Two gravitationally coupled oscillators with arbitrary quadratic potentials.
//
// Phase-space variables are the dimensionless quadratures
//   X_i = sqrt(mω/ħ) x_i,  P_i = p_i / sqrt(ħmω),
// always ordered (X1, P1, X2, P2). The partial transpose in entanglement.hpp
// relies on this ordering.
//
// Time: K and D below carry a factor ω, so they act on physical time t.
// The canonical clock elsewhere is the dimensionless τ = ωt.

#include <cmath>

#include "gravent/constants.hpp"
#include "gravent/errors.hpp"
#include "gravent/scalar.hpp"

namespace gravent {

/// Dimensionless parameters of the Langevin system.
///
/// lambda_i = k_i/(mω²) selects the potential (+1 harmonic, 0 free,
/// -1 inverted), eta is the gravitational coupling, mu the white-noise
/// strength and chi = ω_in/ω the depth of the trap the initial state was
/// prepared in.
class SystemParams {
 public:
  /// Throws InvalidParameter unless omega > 0, eta >= 0, mu >= 0, chi > 0 and
  /// every field is finite.
  SystemParams(double omega, double lambda1, double lambda2, double eta,
               double mu, double chi = 1.0);

  double omega() const noexcept { return omega_; }
  double lambda1() const noexcept { return lambda1_; }
  double lambda2() const noexcept { return lambda2_; }
  double eta() const noexcept { return eta_; }
  double mu() const noexcept { return mu_; }
  double chi() const noexcept { return chi_; }

  bool symmetric() const noexcept { return lambda1_ == lambda2_; }

  /// Set when eta >= 0.1 or mu >= 0.1: the first-order formulas of the
  /// analytic module are no longer trustworthy. Not an error.
  bool perturbative_warning() const noexcept { return warning_; }

  SystemParams with_lambdas(double lambda1, double lambda2) const;
  SystemParams with_coupling(double eta, double mu) const;
  SystemParams with_chi(double chi) const;

 private:
  double omega_;
  double lambda1_;
  double lambda2_;
  double eta_;
  double mu_;
  double chi_;
  bool warning_;
};

/// Oscillator mass, separation and frequency in SI units.
struct PhysicalParams {
  double mass;        // kg
  double separation;  // m, centre to centre
  double omega;       // rad/s
};

void validate(const PhysicalParams& p);

/// η = 2Gm/(ω²d³).
double eta_from_physical(const PhysicalParams& p,
                         const Constants& k = codata2018);

/// Zero-mean Gaussian state: time τ and the symmetric covariance over
/// (X1, P1, X2, P2).
template <typename Scalar>
struct CovarianceState {
  Scalar time{0};
  Matrix4<Scalar> matrix = Matrix4<Scalar>::Zero();

  template <typename To>
  CovarianceState<To> cast() const {
    return {static_cast<To>(time), cast_matrix<To>(matrix)};
  }
};

/// Drift matrix K of du/dt = K u + ℓ(t).
template <typename Scalar = double>
Matrix4<Scalar> drift_matrix(const SystemParams& s) {
  const Scalar w(s.omega());
  const Scalar eta(s.eta());
  Matrix4<Scalar> k = Matrix4<Scalar>::Zero();
  k(0, 1) = w;
  k(1, 0) = w * (eta - Scalar(s.lambda1()));
  k(1, 2) = -w * eta;
  k(2, 3) = w;
  k(3, 0) = -w * eta;
  k(3, 2) = w * (eta - Scalar(s.lambda2()));
  return k;
}

/// Diffusion matrix diag(0, μω, 0, μω) of the white force noise.
template <typename Scalar = double>
Matrix4<Scalar> noise_matrix(const SystemParams& s) {
  const Scalar d = Scalar(s.mu()) * Scalar(s.omega());
  Matrix4<Scalar> m = Matrix4<Scalar>::Zero();
  m(1, 1) = d;
  m(3, 3) = d;
  return m;
}

/// Ground state of a trap with frequency χω, expressed in units of ω:
/// diag(1/(2χ), χ/2, 1/(2χ), χ/2) at τ = 0.
template <typename Scalar = double>
CovarianceState<Scalar> initial_covariance(double chi) {
  if (!(chi > 0.0) || !std::isfinite(chi))
    throw InvalidParameter("initial_covariance: chi must be positive");
  const Scalar c(chi);
  CovarianceState<Scalar> state;
  state.time = Scalar(0);
  state.matrix.diagonal() << Scalar(1) / (2 * c), c / 2, Scalar(1) / (2 * c),
      c / 2;
  return state;
}

}  // namespace gravent

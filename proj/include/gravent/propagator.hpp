#pragma once

// Covariance propagation for the linear Langevin system du/dt = K u + ℓ(t).
//
// The covariance obeys the Lyapunov equation dσ/dt = Kσ + σKᵀ + D with
// solution
//   σ(t) = W(t) σ(0) Wᵀ(t) + ∫₀ᵗ e^{Ks} D e^{Kᵀs} ds,  W(t) = e^{Kt}.
// The noise term is read off the augmented exponential
//   exp([[-K, D], [0, Kᵀ]] t) = [[e^{-Kt}, E12], [0, e^{Kᵀt}]],
// since e^{Kt}·E12 equals the integral above (Van Loan's identity). An
// independent adaptive Runge-Kutta integration of the Lyapunov equation is
// kept as `propagate_oracle`.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "gravent/core_model.hpp"
#include "gravent/errors.hpp"
#include "gravent/matrix_exponential.hpp"
#include "gravent/scalar.hpp"

namespace gravent {

enum class PropagationMethod { Exact, Oracle };

/// Everything needed to evolve a covariance: drift and diffusion in physical
/// time units, the frequency ω that converts τ = ωt to t, and the method.
template <typename Scalar = double>
struct PropagatorPlan {
  Matrix4<Scalar> drift = Matrix4<Scalar>::Zero();
  Matrix4<Scalar> diffusion = Matrix4<Scalar>::Zero();
  double omega = 1.0;
  PropagationMethod method = PropagationMethod::Exact;
  /// Relative accuracy target of the oracle integrator, in (0, 1e-3].
  double tolerance = 1e-10;

  static PropagatorPlan from(const SystemParams& s,
                             PropagationMethod method = PropagationMethod::Exact,
                             double tolerance = 1e-10) {
    PropagatorPlan plan;
    plan.drift = drift_matrix<Scalar>(s);
    plan.diffusion = noise_matrix<Scalar>(s);
    plan.omega = s.omega();
    plan.method = method;
    plan.tolerance = tolerance;
    plan.validate();
    return plan;
  }

  void validate() const {
    if (!(tolerance > 0.0 && tolerance <= 1e-3))
      throw InvalidParameter("PropagatorPlan: tolerance must lie in (0, 1e-3]");
    if (!(omega > 0.0) || !std::isfinite(omega))
      throw InvalidParameter("PropagatorPlan: omega must be > 0");
  }
};

namespace detail {

template <typename Scalar>
Matrix4<Scalar> symmetrized(const Matrix4<Scalar>& m) {
  return (m + m.transpose()) / Scalar(2);
}

template <typename Scalar>
Matrix8<Scalar> van_loan_exponential(const Matrix4<Scalar>& k,
                                     const Matrix4<Scalar>& d, const Scalar& t,
                                     double tau) {
  Matrix8<Scalar> block = Matrix8<Scalar>::Zero();
  block.template topLeftCorner<4, 4>() = -k * t;
  block.template topRightCorner<4, 4>() = d * t;
  block.template bottomRightCorner<4, 4>() = k.transpose() * t;
  return matrix_exponential(block, tau);
}

template <typename Scalar>
void check_range(const Matrix4<Scalar>& m, double tau, const char* where) {
  if (!entries_in_range(m))
    throw Overflow(std::string(where) + ": covariance exceeds 1e250 at tau = " +
                       std::to_string(tau),
                   tau);
}

template <typename Scalar>
void check_request(const PropagatorPlan<Scalar>& plan,
                   const CovarianceState<Scalar>& initial, double tau) {
  plan.validate();
  if (!std::isfinite(tau))
    throw InvalidParameter("propagate: tau must be finite");
  if (Scalar(tau) < initial.time)
    throw InvalidParameter("propagate: tau precedes the initial state time");
}

}  // namespace detail

/// The integral ∫₀ᵗ e^{-Ks} D e^{-Kᵀs} ds, with t in the time units of K.
template <typename Scalar>
Matrix4<Scalar> noise_integral(const Matrix4<Scalar>& k,
                               const Matrix4<Scalar>& d, double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw InvalidParameter("noise_integral: t must be finite and >= 0");
  if (d.isZero(0)) return Matrix4<Scalar>::Zero();
  const Matrix8<Scalar> e = detail::van_loan_exponential(k, d, Scalar(t), t);
  // E12 = ∫ e^{-K(t-s)} D e^{Kᵀs} ds; right-multiplying by e^{-Kᵀt} = E11ᵀ
  // shifts it to the integrand e^{-Ku} D e^{-Kᵀu}.
  const Matrix4<Scalar> result =
      e.template topRightCorner<4, 4>() *
      e.template topLeftCorner<4, 4>().transpose();
  if (!detail::entries_in_range(result))
    throw NonConvergence("noise_integral: result is not finite");
  return detail::symmetrized(result);
}

template <typename Scalar>
CovarianceState<Scalar> propagate_oracle(const PropagatorPlan<Scalar>& plan,
                                         const CovarianceState<Scalar>& initial,
                                         double tau);

/// σ(τ) from σ(τ₀) using matrix exponentials. The output is symmetrized.
/// Throws Overflow once any entry exceeds 1e250.
template <typename Scalar>
CovarianceState<Scalar> propagate(const PropagatorPlan<Scalar>& plan,
                                  const CovarianceState<Scalar>& initial,
                                  double tau) {
  if (plan.method == PropagationMethod::Oracle)
    return propagate_oracle(plan, initial, tau);
  detail::check_request(plan, initial, tau);

  const Scalar t = (Scalar(tau) - initial.time) / Scalar(plan.omega);
  Matrix4<Scalar> sigma;
  if (plan.diffusion.isZero(0)) {
    const Matrix4<Scalar> w =
        matrix_exponential<Scalar, 4>(plan.drift * t, tau);
    sigma = w * initial.matrix * w.transpose();
  } else {
    const Matrix8<Scalar> e =
        detail::van_loan_exponential(plan.drift, plan.diffusion, t, tau);
    // e^{Kt} is the transpose of the lower-right block.
    const Matrix4<Scalar> w = e.template bottomRightCorner<4, 4>().transpose();
    sigma = w * initial.matrix * w.transpose() +
            w * e.template topRightCorner<4, 4>();
  }
  sigma = detail::symmetrized(sigma);
  detail::check_range(sigma, tau, "propagate");
  return {Scalar(tau), sigma};
}

/// Reference solution: integrates dσ/dt = Kσ + σKᵀ + D with an adaptive
/// Runge-Kutta-Fehlberg 7(8) stepper to `plan.tolerance`, always in long
/// double whatever `Scalar` is. Throws NonConvergence when the step size
/// underflows.
template <typename Scalar>
CovarianceState<Scalar> propagate_oracle(const PropagatorPlan<Scalar>& plan,
                                         const CovarianceState<Scalar>& initial,
                                         double tau) {
  namespace odeint = boost::numeric::odeint;
  using Real = long double;
  using State = std::array<Real, 16>;
  detail::check_request(plan, initial, tau);

  const Real t_end = (static_cast<Real>(tau) - static_cast<Real>(initial.time)) /
                     static_cast<Real>(plan.omega);
  if (t_end == 0) return {Scalar(tau), initial.matrix};
  State x;
  Eigen::Map<Matrix4<Real>>(x.data()) = cast_matrix<Real>(initial.matrix);

  const Matrix4<Real> k = cast_matrix<Real>(plan.drift);
  const Matrix4<Real> d = cast_matrix<Real>(plan.diffusion);
  auto rhs = [&k, &d](const State& s, State& ds, Real /*t*/) {
    const Eigen::Map<const Matrix4<Real>> sig(s.data());
    const Matrix4<Real> ks = k * sig;
    Eigen::Map<Matrix4<Real>>(ds.data()) = ks + ks.transpose() + d;
  };

  using Stepper = odeint::runge_kutta_fehlberg78<State, Real, State, Real>;
  const Real rel = plan.tolerance;
  auto controlled = odeint::make_controlled(rel * Real(1e-12), rel, Stepper());

  Real t = 0;
  Real dt = t_end / 64;
  const Real min_dt = t_end * 16 * std::numeric_limits<Real>::epsilon();
  std::size_t failures = 0;
  while (t < t_end) {
    if (t + dt > t_end) dt = t_end - t;
    if (controlled.try_step(rhs, x, t, dt) == odeint::success) {
      failures = 0;
    } else if (++failures > 200 || dt < min_dt) {
      throw NonConvergence(
          "propagate_oracle: step size underflow at tau = " +
          std::to_string(static_cast<double>(
              static_cast<Real>(initial.time) + t * plan.omega)));
    }
  }

  const Matrix4<Real> sigma = Eigen::Map<Matrix4<Real>>(x.data());
  Matrix4<Scalar> out = detail::symmetrized(cast_matrix<Scalar>(sigma));
  detail::check_range(out, tau, "propagate_oracle");
  return {Scalar(tau), out};
}

}  // namespace gravent

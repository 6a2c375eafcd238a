#pragma once

#include <stdexcept>
#include <string>

namespace gravent {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates its documented domain (negative mass, χ ≤ 0, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Formula evaluated at a point where it is undefined (e.g. λ = 0 in the full
/// f_gra expression).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested parameter combination has no closed form in this library.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A propagated matrix left the representable range. Carries the time at
/// which the guard tripped.
class Overflow : public Error {
 public:
  Overflow(const std::string& what, double tau) : Error(what), tau_(tau) {}
  double tau() const noexcept { return tau_; }

 private:
  double tau_;
};

/// An iterative routine (ODE oracle, quadrature) failed to reach tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// The covariance matrix is not a valid (positive definite) state.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// Entanglement never forms: η ≤ μ in the asymptotic model, or the numeric
/// E_N never reaches the target inside the search window.
class NoEntanglement : public Error {
 public:
  NoEntanglement(const std::string& what, double max_log_negativity)
      : Error(what), max_log_negativity_(max_log_negativity) {}
  double max_log_negativity() const noexcept { return max_log_negativity_; }

 private:
  double max_log_negativity_;
};

/// A small-displacement approximation was used outside its validity range.
class ApproximationInvalid : public Error {
 public:
  using Error::Error;
};

}  // namespace gravent

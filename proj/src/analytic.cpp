#include "gravent/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gravent/errors.hpp"
#include "gravent/propagator.hpp"

namespace gravent {

namespace {

void check_tau(double tau, const char* where) {
  if (!(tau >= 0.0) || !std::isfinite(tau))
    throw InvalidParameter(std::string(where) + ": tau must be finite and >= 0");
}

// h(y) = (1 − sin√y/√y)/y, continued to y < 0 through sinh.
double h(double y) {
  if (std::abs(y) < 1.0) {
    // Σ (−y)^k / (2k+3)!
    double term = 1.0 / 6.0;
    double sum = term;
    for (int k = 1; k < 30; ++k) {
      term *= -y / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  if (y > 0.0) {
    const double s = std::sqrt(y);
    return (1.0 - std::sin(s) / s) / y;
  }
  const double s = std::sqrt(-y);
  return (std::sinh(s) / s - 1.0) / -y;
}

// sin²(√λ τ)/λ, real for either sign of λ.
double sine_square(double lambda, double tau) {
  const double x = std::sqrt(std::abs(lambda)) * tau;
  if (x == 0.0) return tau * tau;
  const double ratio = lambda > 0.0 ? std::sin(x) / x : std::sinh(x) / x;
  return tau * tau * ratio * ratio;
}

double g_term(double lambda, double tau) {
  return 4.0 * tau * tau * tau * h(4.0 * lambda * tau * tau);
}

double f_gra_any(double lambda, double tau) {
  const double a = 2.0 * tau - (1.0 + lambda) * g_term(lambda, tau);
  const double b = 2.0 * sine_square(lambda, tau);
  return 0.25 * std::hypot(a, b);
}

double f_dec_any(double lambda, double tau) {
  return 0.25 * (2.0 * tau + (1.0 - lambda) * g_term(lambda, tau));
}

// sinh(x) − x without cancellation at small x.
double sinh_minus_identity(double x) {
  if (std::abs(x) < 0.5) {
    const double x2 = x * x;
    double term = x * x2 / 6.0;
    double sum = term;
    for (int k = 2; k < 20; ++k) {
      term *= x2 / ((2.0 * k) * (2.0 * k + 1.0));
      sum += term;
    }
    return sum;
  }
  return std::sinh(x) - x;
}

}  // namespace

double f_gra_full(double lambda, double tau) {
  check_tau(tau, "f_gra_full");
  if (lambda == 0.0) throw DomainError("f_gra_full: lambda = 0, use f_free");
  return f_gra_any(lambda, tau);
}

double f_dec_full(double lambda, double tau) {
  check_tau(tau, "f_dec_full");
  if (lambda == 0.0) throw DomainError("f_dec_full: lambda = 0, use f_free");
  return f_dec_any(lambda, tau);
}

FunctionPair f_free(double tau) {
  check_tau(tau, "f_free");
  const double t2 = tau * tau;
  return {tau / 6.0 * std::sqrt(t2 * t2 + 3.0 * t2 + 9.0),
          tau * (t2 + 3.0) / 6.0};
}

FunctionPair f_inverted_chi(double chi, double tau) {
  check_tau(tau, "f_inverted_chi");
  if (!(chi > 0.0) || !std::isfinite(chi))
    throw InvalidParameter("f_inverted_chi: chi must be positive");
  const double c2 = chi * chi;
  const double sh = std::sinh(tau);
  const double a = (c2 + 1.0) * tau - 0.5 * (c2 - 1.0) * std::sinh(2.0 * tau);
  const double b = 2.0 * chi * sh * sh;
  const double f_gra = std::hypot(a, b) / (4.0 * chi);
  const double f_dec =
      ((c2 + 1.0) * sinh_minus_identity(2.0 * tau) + 4.0 * tau) / (8.0 * chi);
  return {f_gra, f_dec};
}

PerturbativeCurve::PerturbativeCurve(double lambda, double chi)
    : lambda_(lambda), chi_(chi) {
  if (!std::isfinite(lambda))
    throw InvalidParameter("PerturbativeCurve: lambda must be finite");
  if (!(chi > 0.0) || !std::isfinite(chi))
    throw InvalidParameter("PerturbativeCurve: chi must be positive");
  if (chi != 1.0 && lambda != -1.0)
    throw Unsupported(
        "PerturbativeCurve: chi != 1 has a closed form only for lambda = -1");
}

FunctionPair PerturbativeCurve::evaluate(double tau) const {
  if (chi_ != 1.0) return f_inverted_chi(chi_, tau);
  if (lambda_ == 0.0) return f_free(tau);
  return {f_gra_full(lambda_, tau), f_dec_full(lambda_, tau)};
}

PerturbativeCurve curve_for(const SystemParams& s) {
  if (!s.symmetric())
    throw Unsupported("perturbative formulas require lambda1 == lambda2");
  return PerturbativeCurve(s.lambda1(), s.chi());
}

double deviation_first_order(const SystemParams& s, double tau) {
  const FunctionPair f = curve_for(s).evaluate(tau);
  return s.eta() * f.f_gra - s.mu() * f.f_dec;
}

double negativity_perturbative(const SystemParams& s, double tau) {
  return std::max(0.0, 3.0 * deviation_first_order(s, tau));
}

NegativityResult<double> negativity_numeric(const SystemParams& s,
                                            double tau) {
  const auto plan = PropagatorPlan<quad>::from(s);
  const auto state = propagate(plan, initial_covariance<quad>(s.chi()), tau);
  const NegativityResult<quad> r = log_negativity(state);
  return {to_double(r.nu_min), to_double(r.deviation),
          to_double(r.log_negativity), r.entangled};
}

double tau_ent_dimensionless(const SystemParams& s, double target,
                             bool include_decoherence) {
  if (!(target > 0.0) || !std::isfinite(target))
    throw InvalidParameter("tau_ent: target must be positive");
  if (!s.symmetric())
    throw Unsupported("tau_ent: requires lambda1 == lambda2");
  const double lambda = s.lambda1();
  if (lambda != 0.0 && lambda != -1.0)
    throw Unsupported("tau_ent: asymptotic forms exist for lambda = 0 and -1");
  if (lambda == 0.0 && s.chi() != 1.0)
    throw Unsupported("tau_ent: chi != 1 requires lambda = -1");

  double coupling = s.eta();
  if (include_decoherence) {
    if (s.eta() <= s.mu())
      throw NoEntanglement("tau_ent: eta <= mu, entanglement never forms", 0.0);
    coupling = s.eta() - s.mu();
  }
  if (!(coupling > 0.0))
    throw NoEntanglement("tau_ent: eta = 0, entanglement never forms", 0.0);

  double tau;
  if (lambda == 0.0) {
    tau = std::cbrt(2.0 * target / coupling);
  } else {
    const double chi = s.chi();
    tau = 0.5 * std::log(16.0 * chi * target /
                         (3.0 * coupling * (chi * chi + 1.0)));
  }
  if (!(tau > 0.0))
    throw DomainError(
        "tau_ent: target too small for the long-time asymptote");
  return tau;
}

double tau_ent(const SystemParams& s, double target, bool include_decoherence) {
  return tau_ent_dimensionless(s, target, include_decoherence) / s.omega();
}

double tau_ent_numeric(const SystemParams& s, double target,
                       const TauEntSearch& search) {
  if (!(target > 0.0) || !std::isfinite(target))
    throw InvalidParameter("tau_ent_numeric: target must be positive");
  if (!(search.tau_start > 0.0 && search.tau_cap > search.tau_start &&
        search.scan_points >= 1 && search.relative_tolerance > 0.0))
    throw InvalidParameter("tau_ent_numeric: invalid search settings");

  const auto plan = PropagatorPlan<quad>::from(s);
  const auto initial = initial_covariance<quad>(s.chi());
  double best = 0.0;
  auto value = [&](double tau) {
    const double e =
        to_double(log_negativity(propagate(plan, initial, tau)).log_negativity);
    best = std::max(best, e);
    return e;
  };

  // Doubling from tau_start until E_N reaches the target.
  double lo = 0.0;
  double hi = search.tau_start;
  bool found = false;
  while (true) {
    if (value(hi) >= target) {
      found = true;
      break;
    }
    if (hi >= search.tau_cap) break;
    lo = hi;
    hi = std::min(2.0 * hi, search.tau_cap);
  }
  if (!found)
    throw NoEntanglement("tau_ent_numeric: E_N never reaches the target for "
                         "tau <= " + std::to_string(search.tau_cap),
                         best);

  // The earliest sample in the bracket that already crosses.
  const double step = (hi - lo) / search.scan_points;
  for (int i = 1; i < search.scan_points; ++i) {
    const double t = lo + i * step;
    if (value(t) >= target) {
      hi = t;
      break;
    }
    lo = t;
  }

  for (int i = 0; i < search.max_bisections &&
                  hi - lo > search.relative_tolerance * hi;
       ++i) {
    const double mid = 0.5 * (lo + hi);
    if (value(mid) >= target)
      hi = mid;
    else
      lo = mid;
  }
  return hi / s.omega();
}

}  // namespace gravent

#include "gravent/core_model.hpp"

#include <cmath>

namespace gravent {

namespace {

constexpr double kPerturbativeLimit = 0.1;

bool finite(double x) { return std::isfinite(x); }

}  // namespace

SystemParams::SystemParams(double omega, double lambda1, double lambda2,
                           double eta, double mu, double chi)
    : omega_(omega),
      lambda1_(lambda1),
      lambda2_(lambda2),
      eta_(eta),
      mu_(mu),
      chi_(chi),
      warning_(eta >= kPerturbativeLimit || mu >= kPerturbativeLimit) {
  if (!finite(omega) || !finite(lambda1) || !finite(lambda2) || !finite(eta) ||
      !finite(mu) || !finite(chi))
    throw InvalidParameter("SystemParams: all fields must be finite");
  if (!(omega > 0.0)) throw InvalidParameter("SystemParams: omega must be > 0");
  if (eta < 0.0) throw InvalidParameter("SystemParams: eta must be >= 0");
  if (mu < 0.0) throw InvalidParameter("SystemParams: mu must be >= 0");
  if (!(chi > 0.0)) throw InvalidParameter("SystemParams: chi must be > 0");
}

SystemParams SystemParams::with_lambdas(double lambda1, double lambda2) const {
  return {omega_, lambda1, lambda2, eta_, mu_, chi_};
}

SystemParams SystemParams::with_coupling(double eta, double mu) const {
  return {omega_, lambda1_, lambda2_, eta, mu, chi_};
}

SystemParams SystemParams::with_chi(double chi) const {
  return {omega_, lambda1_, lambda2_, eta_, mu_, chi};
}

void validate(const PhysicalParams& p) {
  if (!(p.mass > 0.0) || !finite(p.mass))
    throw InvalidParameter("PhysicalParams: mass must be > 0");
  if (!(p.separation > 0.0) || !finite(p.separation))
    throw InvalidParameter("PhysicalParams: separation must be > 0");
  if (!(p.omega > 0.0) || !finite(p.omega))
    throw InvalidParameter("PhysicalParams: omega must be > 0");
}

double eta_from_physical(const PhysicalParams& p, const Constants& k) {
  validate(p);
  const double eta =
      2.0 * k.G * p.mass / (p.omega * p.omega * std::pow(p.separation, 3));
  if (!(eta > 0.0)) throw InvalidParameter("eta_from_physical: eta underflowed");
  return eta;
}

}  // namespace gravent

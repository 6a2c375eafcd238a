#include "gravent/apparatus.hpp"

#include <cmath>
#include <string>

#include "gravent/errors.hpp"

namespace gravent {

namespace {

void require(bool ok, const char* type, const char* message) {
  if (!ok) throw InvalidParameter(std::string(type) + ": " + message);
}

bool positive(double x) { return x > 0.0 && std::isfinite(x); }
bool nonnegative(double x) { return x >= 0.0 && std::isfinite(x); }

}  // namespace

void validate(const EnvironmentParams& e) {
  constexpr const char* t = "EnvironmentParams";
  require(nonnegative(e.pressure), t, "pressure must be >= 0");
  require(positive(e.temperature), t, "temperature must be > 0");
  require(positive(e.radius), t, "radius must be > 0");
  require(positive(e.mass), t, "mass must be > 0");
  require(positive(e.gas_molecule_mass), t, "gas molecule mass must be > 0");
  require(positive(e.omega), t, "omega must be > 0");
}

void validate(const CavityParams& c) {
  constexpr const char* t = "CavityParams";
  require(positive(c.laser_angular_frequency), t,
          "laser angular frequency must be > 0");
  require(std::isfinite(c.detuning), t, "detuning must be finite");
  require(positive(c.decay_rate), t, "decay rate must be > 0");
  require(positive(c.cavity_length), t, "cavity length must be > 0");
  require(positive(c.input_transmittance) && c.input_transmittance <= 1.0, t,
          "input transmittance must lie in (0, 1]");
  require(nonnegative(c.input_power), t, "input power must be >= 0");
  require(positive(c.mirror_mass), t, "mirror mass must be > 0");
}

void validate(const SandwichGeometry& g) {
  constexpr const char* t = "SandwichGeometry";
  require(positive(g.mirror_mass), t, "mirror mass must be > 0");
  require(nonnegative(g.power_lower), t, "lower power must be >= 0");
  require(nonnegative(g.power_upper), t, "upper power must be >= 0");
  require(positive(g.a_lower), t, "a_lower must be > 0");
  require(positive(g.a_upper), t, "a_upper must be > 0");
  require(positive(g.gravity), t, "gravity must be > 0");
}

}  // namespace gravent

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gravent/analytic.hpp"
#include "gravent/core_model.hpp"
#include "gravent/decoherence.hpp"
#include "gravent/design.hpp"

using namespace gravent;

namespace {

// 0.1 mg at 1 kHz in 1e-17 Pa of 1 K nitrogen, radius 0.2 mm.
EnvironmentParams fiducial_gas() {
  return {1e-17, 1.0, 0.2 * units::mm, 0.1 * units::mg, units::nitrogen_mass,
          1e3};
}

double laser() { return units::laser_angular_frequency(1064 * units::nm, codata2018.c); }

CavityParams detuned_cavity(double ratio, double length = 0.01) {
  const double t_in = 0.1;
  const double kappa = t_in * codata2018.c / (4 * length);
  return {laser(), -ratio * kappa, kappa, length, t_in, 1.0, 0.1 * units::mg};
}

SandwichGeometry inverted_stack() {
  return {0.1 * units::mg, 30 * units::kW, 0.0, 2 * units::mm, 3 * units::mm, 9.81};
}

double fiducial_eta() {
  const double mass = 0.1 * units::mg;
  return eta_from_physical({mass, std::cbrt(mass / 2000.0), 1e3});
}

}  // namespace

TEST_CASE("gas decoherence strength") {
  const EnvironmentParams e = fiducial_gas();
  CHECK(mu_air(e) == doctest::Approx(4e-13).epsilon(0.05));
  EnvironmentParams fast = e;
  fast.omega *= 2;
  CHECK(mu_air(fast) == doctest::Approx(mu_air(e) / 4).epsilon(1e-14));
  EnvironmentParams hot = e;
  hot.temperature *= 4;
  CHECK(mu_air(hot) == doctest::Approx(2 * mu_air(e)).epsilon(1e-14));
  EnvironmentParams big = e;
  big.radius *= 2;
  CHECK(mu_air(big) == doctest::Approx(4 * mu_air(e)).epsilon(1e-14));
  for (double w : {10.0, 1e3, 1e5}) {
    EnvironmentParams x = e;
    x.omega = w;
    CHECK(mu_air(x) * w * w == doctest::Approx(mu_air(e) * 1e6).epsilon(1e-13));
  }
  EnvironmentParams vacuum = e;
  vacuum.pressure = 0.0;
  CHECK(mu_air(vacuum) == 0.0);
}

TEST_CASE("time between gas collisions") {
  const EnvironmentParams e = fiducial_gas();
  CHECK(tau_air(e) == doctest::Approx(0.64).epsilon(0.05));
  EnvironmentParams half = e;
  half.pressure /= 2;
  CHECK(tau_air(half) == doctest::Approx(2 * tau_air(e)).epsilon(1e-14));
  EnvironmentParams big = e;
  big.radius *= 2;
  CHECK(tau_air(big) == doctest::Approx(tau_air(e) / 4).epsilon(1e-14));
  for (double p : {1e-19, 1e-17, 1e-12}) {
    EnvironmentParams x = e;
    x.pressure = p;
    CHECK(tau_air(x) * p == doctest::Approx(tau_air(e) * 1e-17).epsilon(1e-13));
  }
  EnvironmentParams vacuum = e;
  vacuum.pressure = 0.0;
  CHECK(std::isinf(tau_air(vacuum)));
  EnvironmentParams bad = e;
  bad.pressure = -1.0;
  CHECK_THROWS_AS(tau_air(bad), InvalidParameter);
}

TEST_CASE("pressure bound") {
  const double tau_required = tau_ent(SystemParams(1e3, -1, -1, fiducial_eta(), 0), 1e-2, false);
  EnvironmentParams e = fiducial_gas();
  e.radius = 0.2 * units::mm;
  CHECK(max_pressure(e, tau_required) == doctest::Approx(5.3e-16).epsilon(0.1));
  e.radius = 0.1 * units::mm;
  const double p = max_pressure(e, tau_required);
  CHECK(max_pressure(e, 2 * tau_required) == doctest::Approx(p / 2).epsilon(1e-14));
  EnvironmentParams hot = e;
  hot.temperature *= 4;
  CHECK(max_pressure(hot, tau_required) == doctest::Approx(2 * p).epsilon(1e-14));
  e.pressure = p;
  CHECK(tau_air(e) == doctest::Approx(tau_required).epsilon(1e-12));
  CHECK_THROWS_AS(max_pressure(e, 0.0), InvalidParameter);
}

TEST_CASE("intracavity power") {
  CavityParams c = detuned_cavity(0.0);
  c.input_power = 2.0;
  CHECK(intracavity_power(c) == doctest::Approx(80.0).epsilon(1e-15));
  c.detuning = c.decay_rate;
  CHECK(intracavity_power(c) == doctest::Approx(40.0).epsilon(1e-15));
  c.input_power = 0.0;
  CHECK(intracavity_power(c) == 0.0);
}

TEST_CASE("shot-noise spectral density") {
  const CavityParams c = detuned_cavity(3.0);
  CHECK(shot_noise_psd(c, 0.0) == 0.0);
  CHECK(shot_noise_psd(c, 2.0) == doctest::Approx(2 * shot_noise_psd(c, 1.0)).epsilon(1e-15));
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    CavityParams x = c;
    x.input_power = 1e-3 + 10 * u(rng);
    x.input_transmittance = 0.01 + 0.99 * u(rng);
    x.detuning = (u(rng) - 0.5) * 20 * x.decay_rate;
    const double p = intracavity_power(x);
    CHECK(shot_noise_psd_from_fluctuation(x, p) ==
          doctest::Approx(shot_noise_psd(x, p)).epsilon(1e-12));
  }
}

TEST_CASE("detuned shot noise") {
  SUBCASE("reduced value") {
    CHECK(mu_shot_reduced(-1e13, 1.0) == doctest::Approx(1e-13).epsilon(1e-15));
    CHECK(mu_shot_reduced(5.0, 5.0) == 1.0);
    CHECK(mu_shot_reduced(-300.0, 3.0) == mu_shot_reduced(-100.0, 1.0));
    CHECK_THROWS_AS(mu_shot_reduced(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(mu_shot_substituted(0.0, 1.0), DomainError);
  }
  SUBCASE("general formula at the optical-spring frequency") {
    for (double ratio : {0.1, 0.5, 1.0, 7.0, 100.0}) {
      const CavityParams c = detuned_cavity(ratio);
      const double w2 = optical_spring_detuned(c, intracavity_power(c));
      CHECK(w2 < 0.0);
      const double mu = mu_shot_detuned(c, std::sqrt(-w2));
      CHECK(mu == doctest::Approx(mu_shot_substituted(-ratio, 1.0)).epsilon(1e-9));
      CHECK(mu == doctest::Approx((1 + ratio * ratio) / ratio).epsilon(1e-9));
    }
  }
  SUBCASE("strong detuning grows as |Delta|/kappa") {
    const CavityParams c = detuned_cavity(1e4);
    const double w2 = optical_spring_detuned(c, intracavity_power(c));
    CHECK(mu_shot_detuned(c, std::sqrt(-w2)) == doctest::Approx(1e4).epsilon(1e-6));
  }
  SUBCASE("scales as 1/omega^2") {
    const CavityParams c = detuned_cavity(2.0);
    CHECK(mu_shot_detuned(c, 2e3) ==
          doctest::Approx(mu_shot_detuned(c, 1e3) / 4).epsilon(1e-14));
    CHECK_THROWS_AS(mu_shot_detuned(c, 0.0), InvalidParameter);
  }
}

TEST_CASE("wavefunction spread") {
  const double mass = 0.1 * units::mg;
  CHECK(wavefunction_spread(mass, 1e6, 0.0) ==
        doctest::Approx(std::sqrt(codata2018.hbar / (2 * mass * 1e6))).epsilon(1e-15));
  CHECK(wavefunction_spread(4 * mass, 1e6, 2.0) ==
        doctest::Approx(wavefunction_spread(mass, 1e6, 2.0) / 2).epsilon(1e-15));
  CHECK(wavefunction_spread(mass, 1e6, 3.0) ==
        doctest::Approx(std::exp(1.0) * wavefunction_spread(mass, 1e6, 2.0)).epsilon(1e-14));

  const double eta = fiducial_eta();
  const double dx = wavefunction_spread_at_entanglement(mass, 1e3, 1e6, eta, 1e-2);
  CHECK(dx == doctest::Approx(0.3e-12).epsilon(0.2));
  // A stiffer initial trap narrows the start; the spread falls roughly as
  // 1/omega_in.
  const double stiff = wavefunction_spread_at_entanglement(mass, 1e3, 4e6, eta, 1e-2);
  CHECK(stiff / dx == doctest::Approx(0.25).epsilon(0.01));
  CHECK(wavefunction_spread_at_entanglement(4 * mass, 1e3, 1e6, eta, 1e-2) ==
        doctest::Approx(dx / 2).epsilon(1e-14));
  CHECK_THROWS_AS(wavefunction_spread(mass, 0.0, 1.0), InvalidParameter);
}

TEST_CASE("horizontal shot noise") {
  const SandwichGeometry g = inverted_stack();
  const CavityParams c{laser(), 0.0, 1.0, 1.0, 0.1, 0.0, g.mirror_mass};
  const double w2 = horizontal_frequency_sq_approx(g);
  const double dx = 0.3e-12;
  const double mu = mu_shot_horizontal(g, c, dx, std::sqrt(-w2));
  CHECK(mu == doctest::Approx(2.5e-14).epsilon(0.25));
  CHECK(mu == doctest::Approx(mu_shot_horizontal_reduced(g, c, dx)).epsilon(1e-12));
  CHECK(mu_shot_horizontal(g, c, 2 * dx, std::sqrt(-w2)) ==
        doctest::Approx(4 * mu).epsilon(1e-14));
  CHECK(mu_shot_horizontal(g, c, 0.0, std::sqrt(-w2)) == 0.0);
  CHECK_THROWS_AS(mu_shot_horizontal(g, c, 0.011 * g.a_lower, 1e3), ApproximationInvalid);
  CHECK_THROWS_AS(mu_shot_horizontal_reduced(g, c, 0.011 * g.a_lower), ApproximationInvalid);
  CHECK_NOTHROW(mu_shot_horizontal(g, c, 0.009 * g.a_lower, 1e3));
}

TEST_CASE("decoherence hierarchy of the reference design") {
  const SandwichGeometry g = inverted_stack();
  const CavityParams c{laser(), 0.0, 1.0, 1.0, 0.1, 0.0, g.mirror_mass};
  const double w2 = horizontal_frequency_sq_approx(g);
  const double eta = fiducial_eta();
  const double dx =
      wavefunction_spread_at_entanglement(g.mirror_mass, 1e3, 1e6, eta, 1e-2);
  const double horizontal = mu_shot_horizontal(g, c, dx, std::sqrt(-w2));
  const CavityParams d = detuned_cavity(100.0);
  const double detuned =
      mu_shot_detuned(d, std::sqrt(-optical_spring_detuned(d, intracavity_power(d))));
  CHECK(horizontal < eta);
  CHECK(eta < detuned);
  CHECK(mu_air(fiducial_gas()) < 2 * eta);
}

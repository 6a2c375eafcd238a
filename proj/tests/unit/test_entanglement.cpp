#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gravent/entanglement.hpp"
#include "gravent/propagator.hpp"
#include "oracles.hpp"

using namespace gravent;

namespace {

CovarianceState<double> state_of(const Matrix4<double>& m) { return {0.0, m}; }

CovarianceState<quad> evolve(const SystemParams& s, double tau) {
  return propagate(PropagatorPlan<quad>::from(s), initial_covariance<quad>(s.chi()),
                   tau);
}

/// Random pure or mixed single-mode state, ν ≥ 1/2.
Matrix2<double> random_mode(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double nu = 0.5 + u(rng);
  const double r = 2 * u(rng) - 1;
  const double phi = std::numbers::pi * u(rng);
  Matrix2<double> rot;
  rot << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  const Matrix2<double> sq = Eigen::Vector2d(std::exp(r), std::exp(-r)).asDiagonal();
  return nu * rot * sq * sq * rot.transpose();
}

}  // namespace

TEST_CASE("partial transpose flips the second momentum") {
  Matrix4<double> m;
  for (int i = 0; i < 16; ++i) m.data()[i] = i + 1;
  m = (m + m.transpose()).eval();
  const auto t = partial_transpose(state_of(m)).matrix;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double sign = ((i == 3) != (j == 3)) ? -1.0 : 1.0;
      CHECK(t(i, j) == sign * m(i, j));
    }
  CHECK(partial_transpose(partial_transpose(state_of(m))).matrix == m);
}

TEST_CASE("partial transpose is an involution on random states") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix4<double> m = oracle::random_state(rng, 0.5, 0.9, 0.8);
    CHECK(partial_transpose(partial_transpose(state_of(m))).matrix == m);
  }
}

TEST_CASE("vacuum sits on the physicality bound") {
  const auto vac = state_of(Matrix4<double>::Identity() / 2);
  CHECK(min_symplectic_eigenvalue(partial_transpose(vac)) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(min_symplectic_eigenvalue_invariants(partial_transpose(vac)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  const auto result = log_negativity(vac);
  CHECK(result.log_negativity == 0.0);
  CHECK_FALSE(result.entangled);
  for (double chi : {0.1, 3.0, 50.0}) {
    const auto squeezed = initial_covariance(chi);
    CHECK(log_negativity(squeezed).log_negativity == 0.0);
    CHECK(min_symplectic_eigenvalue(partial_transpose(squeezed)) ==
          doctest::Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("two-mode squeezed vacuum") {
  for (double r : {0.01, 0.3, 1.0, 2.5}) {
    const auto result = log_negativity(state_of(oracle::two_mode_squeezed(r)));
    CHECK(result.entangled);
    CHECK(result.nu_min == doctest::Approx(std::exp(-2 * r) / 2).epsilon(1e-10));
    CHECK(result.log_negativity ==
          doctest::Approx(2 * r / std::numbers::ln2).epsilon(1e-10));
  }
}

TEST_CASE("symplectic spectrum of random states") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    double nu1 = u(rng), nu2 = u(rng);
    const Matrix4<double> m = oracle::random_state(rng, nu1, nu2, 0.5);
    if (nu1 > nu2) std::swap(nu1, nu2);
    const auto spec = symplectic_spectrum(m);
    CHECK(spec.nu_min == doctest::Approx(nu1).epsilon(1e-10));
    CHECK(spec.nu_max == doctest::Approx(nu2).epsilon(1e-10));
    CHECK(spec.deviation == doctest::Approx(0.5 - nu1).epsilon(1e-9));
  }
}

TEST_CASE("both eigenvalue routes agree on well-conditioned states") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix4<double> m = oracle::random_state(rng, 0.5, 0.7, 0.4);
    const auto t = partial_transpose(state_of(m));
    CHECK(min_symplectic_eigenvalue(t) ==
          doctest::Approx(min_symplectic_eigenvalue_invariants(t)).epsilon(1e-9));
  }
}

TEST_CASE("product states are never entangled") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    Matrix4<double> m = Matrix4<double>::Zero();
    m.topLeftCorner<2, 2>() = random_mode(rng);
    m.bottomRightCorner<2, 2>() = random_mode(rng);
    const auto result = log_negativity(state_of(m));
    CHECK(result.log_negativity == 0.0);
    CHECK_FALSE(result.entangled);
  }
}

TEST_CASE("E_N is invariant under local symplectic maps") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix4<double> m = oracle::random_state(rng, 0.5, 0.55, 0.6);
    const Matrix4<double> s = oracle::random_local_symplectic(rng);
    const double before = log_negativity(state_of(m)).log_negativity;
    const double after =
        log_negativity(state_of(s * m * s.transpose())).log_negativity;
    CHECK(std::abs(after - before) <= 1e-9);
  }
}

TEST_CASE("nu_min is continuous") {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix4<double> m = oracle::random_state(rng, 0.55, 0.8, 0.3);
    Matrix4<double> e;
    for (int i = 0; i < 16; ++i) e.data()[i] = n(rng);
    e = (e + e.transpose()).eval() * (0.5e-8 / e.cwiseAbs().maxCoeff());
    const double a = symplectic_spectrum(m).nu_min;
    const double b = symplectic_spectrum(Matrix4<double>(m + e)).nu_min;
    CHECK(std::abs(a - b) < 1e-6);
  }
}

TEST_CASE("invalid states are rejected") {
  Matrix4<double> m = Matrix4<double>::Identity() / 2;
  m(0, 0) = -1.0;
  CHECK_THROWS_AS(symplectic_spectrum(m), InvalidState);
  CHECK_THROWS_AS(log_negativity(state_of(m)), InvalidState);

  Matrix4<double> bad = Matrix4<double>::Zero();
  bad.diagonal() << 1, -1, 1, 1;
  CHECK_THROWS_AS(min_symplectic_eigenvalue_invariants(state_of(bad)),
                  InvalidState);
}

TEST_CASE("gravitational entanglement of inverted oscillators") {
  // Reference deviations from a 60-digit evaluation.
  const auto inverted = log_negativity(evolve(SystemParams(1.0, -1, -1, 1e-12, 0), 13.0));
  CHECK(static_cast<double>(inverted.deviation) ==
        doctest::Approx(0.02386796406617708).epsilon(1e-10));
  CHECK(inverted.entangled);
  const auto free = log_negativity(evolve(SystemParams(1.0, 0, 0, 1e-12, 0), 13.0));
  CHECK(static_cast<double>(free.deviation) ==
        doctest::Approx(3.6945955261664603e-10).epsilon(1e-8));
}

TEST_CASE("routes agree on weakly entangled propagated states") {
  for (double lambda : {-1.0, -0.5, 0.0}) {
    const auto t = partial_transpose(evolve(SystemParams(1.0, lambda, lambda, 1e-4, 0), 3.0));
    CHECK(static_cast<double>(min_symplectic_eigenvalue(t)) ==
          doctest::Approx(static_cast<double>(min_symplectic_eigenvalue_invariants(t)))
              .epsilon(1e-10));
  }
}

#pragma once

// Entanglement of a two-mode Gaussian state: partial transpose, symplectic
// spectrum and logarithmic negativity.
//
// Symplectic eigenvalues are computed without the cancellation that plagues
// the closed form ν² = ½(Σ ± √(Σ² − 4 det σ)) near ν ≈ ½. With σ = LLᵀ
// (Cholesky) the matrix M = LᵀΩL is real antisymmetric and similar to Ωσ,
// so its singular values are the symplectic eigenvalues ν₊, ν₋. Splitting M
// into self-dual and anti-self-dual parts a₊, a₋ ∈ ℝ³ gives
//   ν₊ + ν₋ = |a₊|,   ν₊ − ν₋ = |a₋|,
// both invariant under the SO(4) freedom in the factorization. The distance
// ½ − ν₋ is then formed directly from |a₊| and |a₋|.

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include "gravent/core_model.hpp"
#include "gravent/errors.hpp"
#include "gravent/scalar.hpp"

namespace gravent {

template <typename Scalar>
struct SymplecticSpectrum {
  Scalar nu_min;
  Scalar nu_max;
  /// ½ − nu_min, evaluated without forming nu_min first.
  Scalar deviation;
};

template <typename Scalar>
struct NegativityResult {
  Scalar nu_min;
  Scalar deviation;
  Scalar log_negativity;
  bool entangled;
};

/// Λσ Λ with Λ = diag(1, 1, 1, -1): time reversal of the second oscillator.
template <typename Scalar>
CovarianceState<Scalar> partial_transpose(const CovarianceState<Scalar>& state) {
  CovarianceState<Scalar> out = state;
  for (int i = 0; i < 4; ++i) {
    if (i == 3) continue;
    out.matrix(3, i) = -out.matrix(3, i);
    out.matrix(i, 3) = -out.matrix(i, 3);
  }
  return out;
}

/// Both symplectic eigenvalues of a positive definite 4×4 covariance.
/// Throws InvalidState when the matrix is not positive definite.
template <typename Scalar>
SymplecticSpectrum<Scalar> symplectic_spectrum(const Matrix4<Scalar>& sigma) {
  using std::sqrt;
  const Eigen::LLT<Matrix4<Scalar>> llt(sigma);
  if (llt.info() != Eigen::Success)
    throw InvalidState("symplectic_spectrum: covariance is not positive definite");
  const Matrix4<Scalar> l = llt.matrixL();

  // Ω L with Ω = diag(J, J), J = [[0, 1], [-1, 0]].
  Matrix4<Scalar> omega_l;
  omega_l.row(0) = l.row(1);
  omega_l.row(1) = -l.row(0);
  omega_l.row(2) = l.row(3);
  omega_l.row(3) = -l.row(2);
  const Matrix4<Scalar> m = l.transpose() * omega_l;

  const Scalar p1 = m(0, 1) + m(2, 3), p2 = m(0, 2) - m(1, 3),
               p3 = m(0, 3) + m(1, 2);
  const Scalar q1 = m(0, 1) - m(2, 3), q2 = m(0, 2) + m(1, 3),
               q3 = m(0, 3) - m(1, 2);
  const Scalar sum = sqrt(p1 * p1 + p2 * p2 + p3 * p3);
  const Scalar gap = sqrt(q1 * q1 + q2 * q2 + q3 * q3);

  SymplecticSpectrum<Scalar> out;
  out.nu_max = (sum + gap) / 2;
  out.nu_min = (sum - gap) / 2;
  out.deviation = ((Scalar(1) - sum) + gap) / 2;
  return out;
}

/// Minimum symplectic eigenvalue ν̃_min of an already partially transposed
/// covariance σ̃.
template <typename Scalar>
Scalar min_symplectic_eigenvalue(const CovarianceState<Scalar>& transposed) {
  return symplectic_spectrum(transposed.matrix).nu_min;
}

/// The closed-form route ν̃² = ½(Σ̃ − √(Σ̃² − 4 det σ̃)) on σ̃, with
/// Σ̃ = det A + det B + 2 det C of σ̃'s 2×2 blocks (equivalently
/// det σ₁ + det σ₂ − 2 det σ₃ on the untransposed blocks). Accurate only when
/// ν̃ is not close to ½; kept as an independent check.
/// Discriminants down to -1e-12 are clamped to zero; anything more negative
/// throws InvalidState.
template <typename Scalar>
Scalar min_symplectic_eigenvalue_invariants(
    const CovarianceState<Scalar>& transposed) {
  using std::sqrt;
  const Matrix4<Scalar>& s = transposed.matrix;
  const Scalar det_a = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
  const Scalar det_b = s(2, 2) * s(3, 3) - s(2, 3) * s(3, 2);
  const Scalar det_c = s(0, 2) * s(1, 3) - s(0, 3) * s(1, 2);
  const Scalar invariant = det_a + det_b + 2 * det_c;
  const Scalar det = s.determinant();
  const Scalar clamp(1e-12);

  Scalar disc = invariant * invariant - 4 * det;
  if (disc < -clamp)
    throw InvalidState("min_symplectic_eigenvalue: negative discriminant");
  if (disc < 0) disc = 0;
  Scalar bracket = (invariant - sqrt(disc)) / 2;
  if (bracket < -clamp)
    throw InvalidState("min_symplectic_eigenvalue: negative eigenvalue square");
  if (bracket < 0) bracket = 0;
  return sqrt(bracket);
}

/// E_N = max(0, −log₂(2ν̃_min)) of an ordinary (untransposed) covariance.
/// Product states (zero inter-mode block) are separable and give exactly 0
/// whatever the rounding in ν̃_min; elsewhere a deviation within a few
/// rounding units of zero also counts as no violation.
template <typename Scalar>
NegativityResult<Scalar> log_negativity(const CovarianceState<Scalar>& state) {
  using std::log1p;
  const SymplecticSpectrum<Scalar> spec =
      symplectic_spectrum(partial_transpose(state).matrix);
  NegativityResult<Scalar> out;
  out.nu_min = spec.nu_min;
  out.deviation = spec.deviation;
  const Scalar noise = 8 * std::numeric_limits<Scalar>::epsilon() *
                       (spec.nu_min + spec.nu_max);
  const bool product = state.matrix.template topRightCorner<2, 2>().isZero(0);
  out.entangled = !product && spec.deviation > noise;
  out.log_negativity =
      out.entangled ? Scalar(-log1p(-2 * spec.deviation) /
                             Scalar(std::numbers::ln2))
                    : Scalar(0);
  return out;
}

}  // namespace gravent

#pragma once

// Matrix exponential by scaling and squaring with a [13/13] Padé approximant.
//
// The drift matrices handled here are non-normal and switch between real and
// imaginary spectra as λ changes sign, so no eigendecomposition is used.
// The scaling threshold θ is derived from the leading term of the Padé
// remainder, c·θ^27 = u with c = (13!)²/(26!·27!), for the unit roundoff u of
// the scalar type, then halved. For double this gives θ ≈ 2.55, for binary128
// θ ≈ 0.55.

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "gravent/errors.hpp"
#include "gravent/scalar.hpp"

namespace gravent {

/// Entries above this magnitude are treated as a runaway instability.
inline constexpr double kOverflowGuard = 1e250;

namespace detail {

template <typename Scalar>
Scalar pade13_theta() {
  const double u =
      static_cast<double>(std::numeric_limits<Scalar>::epsilon()) / 2.0;
  constexpr double c = 8.829961602018678e-36;
  return Scalar(0.5 * std::pow(u / c, 1.0 / 27.0));
}

template <typename Scalar, int N>
Scalar norm1(const Eigen::Matrix<Scalar, N, N>& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

template <typename Scalar, int N>
bool entries_in_range(const Eigen::Matrix<Scalar, N, N>& m) {
  using std::abs;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Scalar a = abs(m(i, j));
      if (!(a <= Scalar(kOverflowGuard))) return false;  // also catches NaN
    }
  return true;
}

}  // namespace detail

/// e^M for a fixed-size square matrix. Returns exactly the identity for
/// M = 0. Throws Overflow (with `tau` attached) if the result leaves the
/// representable range.
template <typename Scalar, int N>
Eigen::Matrix<Scalar, N, N> matrix_exponential(
    const Eigen::Matrix<Scalar, N, N>& m,
    double tau = std::numeric_limits<double>::quiet_NaN()) {
  using Mat = Eigen::Matrix<Scalar, N, N>;
  static const Scalar b[] = {
      Scalar(64764752532480000LL), Scalar(32382376266240000LL),
      Scalar(7771770303897600LL),  Scalar(1187353796428800LL),
      Scalar(129060195264000LL),   Scalar(10559470521600LL),
      Scalar(670442572800LL),      Scalar(33522128640LL),
      Scalar(1323241920LL),        Scalar(40840800LL),
      Scalar(960960LL),            Scalar(16380LL),
      Scalar(182LL),               Scalar(1LL)};

  if (!detail::entries_in_range(m))
    throw Overflow("matrix_exponential: non-finite or oversized input", tau);

  const Mat id = Mat::Identity();
  if (m.isZero(0)) return id;

  const Scalar norm = detail::norm1(m);
  const Scalar theta = detail::pade13_theta<Scalar>();
  int squarings = 0;
  if (norm > theta) {
    squarings = static_cast<int>(
        std::ceil(std::log2(static_cast<double>(norm / theta))));
  }
  // Exact power-of-two scaling.
  const Mat a = m * Scalar(std::ldexp(1.0, -squarings));

  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  const Mat u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                      b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id;
  const Mat u = a * u_inner;
  const Mat v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                b[4] * a4 + b[2] * a2 + b[0] * id;

  Mat result = Eigen::PartialPivLU<Mat>(v - u).solve(v + u);
  for (int k = 0; k < squarings; ++k) {
    result = (result * result).eval();
    if (!detail::entries_in_range(result))
      throw Overflow("matrix_exponential: result exceeds 1e250", tau);
  }
  if (!detail::entries_in_range(result))
    throw Overflow("matrix_exponential: result exceeds 1e250", tau);
  return result;
}

}  // namespace gravent

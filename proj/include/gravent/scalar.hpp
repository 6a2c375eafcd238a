#pragma once

// Scalar types and fixed-size matrix aliases shared by the linear-algebra core.
//
// The covariance of an inverted oscillator pair at ωt ≈ 13 has a condition
// number of order e^{4ωt} ≈ 1e22, far beyond what double precision can carry
// through to the symplectic spectrum. The numeric pipeline therefore runs on
// `quad` (IEEE binary128 via libquadmath); every template below also accepts
// double and long double.

#include <boost/multiprecision/float128.hpp>
#include <Eigen/Core>

#include <limits>

namespace gravent {

using quad = boost::multiprecision::float128;

}  // namespace gravent

namespace Eigen {

// Boost ships a generic NumTraits for multiprecision numbers, but the 1.74
// version lacks infinity()/quiet_NaN(), which Eigen 3.4's hypot needs.
template <>
struct NumTraits<gravent::quad> : GenericNumTraits<gravent::quad> {
  using Real = gravent::quad;
  using NonInteger = gravent::quad;
  using Nested = gravent::quad;
  using Literal = gravent::quad;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return std::numeric_limits<Real>::epsilon(); }
  static inline Real dummy_precision() { return Real(1e-28); }
  static inline Real highest() { return (std::numeric_limits<Real>::max)(); }
  static inline Real lowest() { return std::numeric_limits<Real>::lowest(); }
  static inline Real infinity() { return std::numeric_limits<Real>::infinity(); }
  static inline Real quiet_NaN() { return std::numeric_limits<Real>::quiet_NaN(); }
  static inline int digits10() { return std::numeric_limits<Real>::digits10; }
};

}  // namespace Eigen

namespace gravent {

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
template <typename Scalar>
using Matrix8 = Eigen::Matrix<Scalar, 8, 8>;

using Matrix4d = Matrix4<double>;
using Matrix4q = Matrix4<quad>;

/// Narrowing conversion used at API boundaries (reports, CSV output).
template <typename Scalar>
inline double to_double(const Scalar& x) {
  return static_cast<double>(x);
}

template <typename To, typename From>
inline Matrix4<To> cast_matrix(const Matrix4<From>& m) {
  Matrix4<To> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = static_cast<To>(m(i, j));
  return out;
}

}  // namespace gravent

#include "oracles.hpp"

#include <cmath>
#include <complex>

#include <Eigen/LU>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

namespace {

template <typename S>
Matrix4<S> taylor_exp(const Matrix4<S>& m) {
  using std::abs;
  S norm(0);
  for (int j = 0; j < 4; ++j) {
    S col(0);
    for (int i = 0; i < 4; ++i) col += abs(m(i, j));
    if (col > norm) norm = col;
  }
  int s = 0;
  while (norm > S(0.25)) {
    norm /= 2;
    ++s;
  }
  const Matrix4<S> a = m / S(std::ldexp(1.0, s));
  Matrix4<S> term = Matrix4<S>::Identity();
  Matrix4<S> sum = term;
  for (int n = 1; n < 60; ++n) {
    term = (term * a / S(n)).eval();
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = (sum * sum).eval();
  return sum;
}

using cplx = std::complex<long double>;

}  // namespace

Matrix4<gravent::quad> series_exp(const Matrix4<gravent::quad>& m) {
  return taylor_exp(m);
}

Matrix4<double> series_exp(const Matrix4<double>& m) {
  return gravent::cast_matrix<double>(
      taylor_exp(gravent::cast_matrix<gravent::quad>(m)));
}

Matrix4<double> noise_integral_quadrature(const Matrix4<double>& k,
                                          const Matrix4<double>& d, double t) {
  Matrix4<double> out = Matrix4<double>::Zero();
  if (t == 0.0) return out;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      auto f = [&](double s) {
        const Matrix4<double> w = series_exp(Matrix4<double>(-k * s));
        return (w * d * w.transpose())(i, j);
      };
      double error = 0.0;
      out(i, j) = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
          f, 0.0, t, 12, 1e-13, &error);
      out(j, i) = out(i, j);
    }
  return out;
}

Matrix4<double> covariance_by_quadrature(const Matrix4<double>& k,
                                         const Matrix4<double>& d,
                                         const Matrix4<double>& sigma0,
                                         double t) {
  const Matrix4<double> w = series_exp(Matrix4<double>(k * t));
  return w * (sigma0 + noise_integral_quadrature(k, d, t)) * w.transpose();
}

double f_gra_trig(double lambda, double tau) {
  const cplx l(lambda);
  const cplx sl = std::sqrt(l);
  const long double t = tau;
  const cplx c1 = 1.0L + l * (l + 8.0L * (l - 1.0L) * (l - 1.0L) * t * t + 14.0L);
  const cplx c2 = -16.0L * l;
  const cplx c3 = 8.0L * sl * (l * l - 1.0L) * t;
  const cplx c4 = -(l - 1.0L) * (l - 1.0L);
  const cplx bracket = c1 + c2 * std::cos(2.0L * sl * t) +
                       c3 * std::sin(2.0L * sl * t) +
                       c4 * std::cos(4.0L * sl * t);
  const cplx f = std::sqrt(bracket) /
                 (8.0L * std::sqrt(2.0L) * l * sl);
  return static_cast<double>(std::abs(f));
}

double f_dec_trig(double lambda, double tau) {
  const cplx l(lambda);
  const cplx sl = std::sqrt(l);
  const long double t = tau;
  const cplx f = (2.0L * sl * (l + 1.0L) * t + (l - 1.0L) * std::sin(2.0L * sl * t)) /
                 (8.0L * l * sl);
  return static_cast<double>(std::abs(f));
}

double f_gra_chi_trig(double chi, double tau) {
  const long double c2 = static_cast<long double>(chi) * chi;
  const long double t = tau;
  const long double bracket =
      8.0L * t * t * (c2 + 1) * (c2 + 1) - c2 * c2 + 14.0L * c2 - 1.0L -
      16.0L * c2 * std::cosh(2.0L * t) -
      8.0L * (c2 * c2 - 1.0L) * t * std::sinh(2.0L * t) +
      (c2 + 1) * (c2 + 1) * std::cosh(4.0L * t);
  return static_cast<double>(std::sqrt(bracket) /
                             (8.0L * std::sqrt(2.0L) * chi));
}

double f_dec_chi_trig(double chi, double tau) {
  const long double c2 = static_cast<long double>(chi) * chi;
  const long double t = tau;
  return static_cast<double>(((c2 + 1) * std::sinh(2.0L * t) -
                              2.0L * (c2 - 1) * t) /
                             (8.0L * chi));
}

Matrix4<double> two_mode_squeezed(double r) {
  const double c = std::cosh(2 * r) / 2, s = std::sinh(2 * r) / 2;
  Matrix4<double> m = Matrix4<double>::Zero();
  m.diagonal().setConstant(c);
  m(0, 2) = m(2, 0) = s;
  m(1, 3) = m(3, 1) = -s;
  return m;
}

Matrix4<double> symplectic_form() {
  Matrix4<double> o = Matrix4<double>::Zero();
  o(0, 1) = o(2, 3) = 1;
  o(1, 0) = o(3, 2) = -1;
  return o;
}

Matrix4<double> random_symplectic(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix4<double> h;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) h(i, j) = h(j, i) = u(rng);
  return series_exp(Matrix4<double>(symplectic_form() * h));
}

Matrix4<double> random_local_symplectic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  Matrix4<double> s = Matrix4<double>::Zero();
  for (int block = 0; block < 2; ++block) {
    Matrix2<double> m;
    double det;
    do {
      m << u(rng), u(rng), u(rng), u(rng);
      det = m.determinant();
    } while (std::abs(det) < 0.2);
    if (det < 0) m.row(0) *= -1, det = -det;
    m /= std::sqrt(det);
    s.block<2, 2>(2 * block, 2 * block) = m;
  }
  return s;
}

Matrix4<double> random_state(std::mt19937_64& rng, double nu1, double nu2,
                             double scale) {
  const Matrix4<double> s = random_symplectic(rng, scale);
  Matrix4<double> d = Matrix4<double>::Zero();
  d.diagonal() << nu1, nu1, nu2, nu2;
  const Matrix4<double> sigma = s * d * s.transpose();
  return (sigma + sigma.transpose()) / 2;
}

}  // namespace oracle

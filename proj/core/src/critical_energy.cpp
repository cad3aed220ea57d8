#include "qbarrier/critical_energy.hpp"

#include <cmath>

#include "qbarrier/errors.hpp"
#include "qbarrier/linalg.hpp"

namespace qbarrier {

namespace {

constexpr cplx kI(0.0, 1.0);

void check_lambda(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidParameter("critical: lambda must be non-negative");
  }
}

}  // namespace

Quaternion CriticalZoneSolution::value(double xi) const {
  if (which == CriticalCase::complex_potential) {
    const double s = std::sqrt(2.0);
    return {a * xi + b, c * std::exp(s * xi) + d * std::exp(-s * xi)};
  }
  const double x2 = xi * xi;
  const double x3 = x2 * xi;
  const cplx phi = a * x3 + b * x2 + c * xi + d;
  const cplx psi = -kI * std::exp(-kI * theta) * (a * x3 + b * x2 + (6.0 * a + c) * xi + 2.0 * b + d);
  return {phi, psi};
}

Quaternion critical_zone2(double xi, const CriticalZoneSolution& solution) { return solution.value(xi); }

CriticalAmplitudes critical_complex(double lambda) {
  check_lambda(lambda);
  CriticalAmplitudes out;
  out.which = CriticalCase::complex_potential;
  const cplx den = 2.0 - kI * lambda;
  out.r = -kI * lambda / den;
  out.t = 2.0 * std::exp(-kI * lambda) / den;
  // phi(0) = 1 + R, phi'(0) = i (1 - R); the j-channel sees homogeneous data.
  out.zone2.which = CriticalCase::complex_potential;
  out.zone2.a = kI * (1.0 - out.r);
  out.zone2.b = 1.0 + out.r;
  return out;
}

cplx critical_quaternionic_denominator(double lambda) {
  const double l = lambda;
  return 24.0 + 24.0 * (1.0 - kI) * l - 18.0 * kI * l * l - 4.0 * (1.0 + kI) * l * l * l - l * l * l * l;
}

CriticalAmplitudes critical_quaternionic(double lambda, double theta) {
  check_lambda(lambda);
  const double l = lambda;
  const cplx den = critical_quaternionic_denominator(l);
  if (std::abs(den) == 0.0) throw SingularSystem("critical_quaternionic: denominator root");

  CriticalAmplitudes out;
  out.which = CriticalCase::pure_quaternionic;
  out.r = -kI * l * l * (6.0 + 4.0 * l + l * l) / den;
  out.t = 2.0 * std::exp(-kI * l) * (12.0 + 12.0 * l + 6.0 * l * l + l * l * l) / den;

  // Continuity at 0 and lambda with phi, psi from the cubic solution and the
  // eps = 1 free forms.  Unknowns (R, R~, T, T~ e^{-l}, A, B, C, D).
  const cplx u = -kI * std::exp(-kI * theta);
  const cplx wave = std::exp(kI * l);
  const double l2 = l * l;
  const double l3 = l2 * l;
  CMatrix<8> m;
  std::array<cplx, 8> rhs{};
  // phi(0) = D = 1 + R
  m(0, 0) = -1.0;
  m(0, 7) = 1.0;
  rhs[0] = 1.0;
  // phi'(0) = C = i (1 - R)
  m(1, 0) = kI;
  m(1, 6) = 1.0;
  rhs[1] = kI;
  // psi(0) = u (2B + D) = R~
  m(2, 1) = -1.0;
  m(2, 5) = 2.0 * u;
  m(2, 7) = u;
  // psi'(0) = u (6A + C) = R~
  m(3, 1) = -1.0;
  m(3, 4) = 6.0 * u;
  m(3, 6) = u;
  // phi(l) = T e^{i l}
  m(4, 2) = -wave;
  m(4, 4) = l3;
  m(4, 5) = l2;
  m(4, 6) = l;
  m(4, 7) = 1.0;
  // phi'(l) = i T e^{i l}
  m(5, 2) = -kI * wave;
  m(5, 4) = 3.0 * l2;
  m(5, 5) = 2.0 * l;
  m(5, 6) = 1.0;
  // psi(l) = T~ e^{-l}
  m(6, 3) = -1.0;
  m(6, 4) = u * (l3 + 6.0 * l);
  m(6, 5) = u * (l2 + 2.0);
  m(6, 6) = u * l;
  m(6, 7) = u;
  // psi'(l) = -T~ e^{-l}
  m(7, 3) = 1.0;
  m(7, 4) = u * (3.0 * l2 + 6.0);
  m(7, 5) = u * (2.0 * l);
  m(7, 6) = u;

  const auto x = solve(m, rhs);
  out.rt = x[1];
  out.tt = x[3] * std::exp(l);
  out.zone2.which = CriticalCase::pure_quaternionic;
  out.zone2.theta = theta;
  out.zone2.a = x[4];
  out.zone2.b = x[5];
  out.zone2.c = x[6];
  out.zone2.d = x[7];
  return out;
}

SeriesModuli asymptotic_moduli(double lambda, SeriesRegime regime, CriticalCase which) {
  const double l = lambda;
  SeriesModuli out;
  if (regime == SeriesRegime::thin) {
    out.outside_regime = l >= 0.3;
    const double l2 = l * l;
    if (which == CriticalCase::complex_potential) {
      out.r = l / 2.0 - l2 * l / 16.0;
      out.t = 1.0 - l2 / 8.0 + 3.0 * l2 * l2 / 128.0;
    } else {
      out.r = l2 / 4.0 - l2 * l / 12.0;
      out.t = 1.0 - l2 * l2 / 32.0;
    }
    return out;
  }
  out.outside_regime = l <= 10.0;
  const double u = 1.0 / l;
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double u4 = u2 * u2;
  if (which == CriticalCase::complex_potential) {
    out.r = 1.0 - 2.0 * u2 + 6.0 * u4;
    out.t = 2.0 * u - 4.0 * u3;
  } else {
    out.r = 1.0 - 2.0 * u2 - 8.0 * u3 + 6.0 * u4;
    out.t = 2.0 * u + 4.0 * u2 - 8.0 * u3 - 8.0 * u4;
  }
  return out;
}

}  // namespace qbarrier

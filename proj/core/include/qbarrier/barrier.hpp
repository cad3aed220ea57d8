#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qbarrier/errors.hpp"
#include "qbarrier/float128.hpp"
#include "qbarrier/quaternion.hpp"

namespace qbarrier {

/// Tolerance on |eps^4 - Vq^2| below which alpha_+ and alpha_- coincide.
inline constexpr double kDegeneracyTolerance = 1e-10;
/// |alpha_-| below this is treated as zero.
inline constexpr double kZeroAlphaTolerance = 1e-10;

/// Physical square barrier i V1 + j V2 + k V3 of width L, plus the particle.
struct BarrierSpec {
  double v1 = 0.0;
  double v2 = 0.0;
  double v3 = 0.0;
  double length = 0.0;
  double mass = 1.0;
  double hbar = 1.0;
  double energy = 0.0;
};

/// Reduced barrier: Vc = V1/V0, Vq = sqrt(V2^2 + V3^2)/V0, tan(theta) = V3/V2,
/// lambda = sqrt(2 m V0 / hbar^2) L.
struct AdimensionalBarrier {
  double vc = 1.0;
  double vq = 0.0;
  double theta = 0.0;
  double lambda = 0.0;

  /// Barrier on the unit circle Vc^2 + Vq^2 = 1 with Vq >= 0.
  static AdimensionalBarrier from_vc(double vc, double theta, double lambda) {
    return {vc, std::sqrt(std::max(0.0, 1.0 - vc * vc)), theta, lambda};
  }

  /// Throws InvalidParameter unless Vc^2 + Vq^2 = 1 (to `tolerance`), Vq >= 0
  /// and lambda >= 0.
  void validate(double tolerance = 1e-12) const;
};

struct ReducedProblem {
  AdimensionalBarrier barrier;
  double eps = 0.0;
};

/// V0 = |V|, eps = sqrt(E/V0).  Throws InvalidParameter for V0 = 0, E <= 0,
/// non-positive length, mass or hbar.
ReducedProblem adimensionalize(const BarrierSpec& spec);

/// Complex quantities entering the zone-II solution
///   (1 + j gamma){e^{a- x} A + e^{-a- x} B} + (beta + j){e^{a+ x} A~ + e^{-a+ x} B~}.
template <class C>
struct BasicWaveParams {
  double eps = 0.0;
  C alpha_minus;
  C alpha_plus;
  C beta;
  C gamma;
};

using WaveParams = BasicWaveParams<cplx>;

/// Evaluates alpha_pm = sqrt(Vc +- sqrt(eps^4 - Vq^2)) and
/// beta = i Vq e^{i theta} / (eps^2 + sqrt(eps^4 - Vq^2)), gamma = -i Vq e^{-i theta} / (...)
/// with principal square roots throughout.  Throws DegenerateParameters when
/// |eps^4 - Vq^2| <= kDegeneracyTolerance and InvalidParameter for eps <= 0.
template <class C>
BasicWaveParams<C> basic_wave_params(double eps, const AdimensionalBarrier& b) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw InvalidParameter("wave_params: eps must be positive, got " + std::to_string(eps));
  }
  const double gap = eps * eps * eps * eps - b.vq * b.vq;
  if (std::abs(gap) <= kDegeneracyTolerance) {
    throw DegenerateParameters("wave_params: eps^4 = Vq^2 (alpha_+ = alpha_-) at eps = " +
                               std::to_string(eps) + ", Vq = " + std::to_string(b.vq));
  }
  const C e(eps);
  const C e2 = e * e;
  const C vq(b.vq);
  const C vc(b.vc);
  // Imaginary part is +0, so negative radicands land on +i sqrt(|.|).
  const C root = sqrt(e2 * e2 - vq * vq);
  const C i(0.0, 1.0);
  const C phase = exp(i * C(b.theta));
  const C denom = e2 + root;

  BasicWaveParams<C> p;
  p.eps = eps;
  p.alpha_minus = sqrt(vc - root);
  p.alpha_plus = sqrt(vc + root);
  p.beta = i * vq * phase / denom;
  p.gamma = -(i * vq * conj(phase)) / denom;
  return p;
}

WaveParams wave_params(double eps, const AdimensionalBarrier& b);

/// beta * gamma = Vq^2 / (eps^2 + sqrt(eps^4 - Vq^2))^2, which does not depend on theta.
cplx beta_gamma_product(double eps, const AdimensionalBarrier& b);

}  // namespace qbarrier

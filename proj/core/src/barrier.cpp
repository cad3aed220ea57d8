#include "qbarrier/barrier.hpp"

#include <cmath>
#include <string>

namespace qbarrier {

void AdimensionalBarrier::validate(double tolerance) const {
  if (!std::isfinite(vc) || !std::isfinite(vq) || !std::isfinite(theta) || !std::isfinite(lambda)) {
    throw InvalidParameter("barrier: non-finite parameter");
  }
  if (vq < 0.0) throw InvalidParameter("barrier: Vq must be non-negative");
  if (std::abs(vc * vc + vq * vq - 1.0) > tolerance) {
    throw InvalidParameter("barrier: Vc^2 + Vq^2 must equal 1 (got " +
                           std::to_string(vc * vc + vq * vq) + ")");
  }
  if (lambda < 0.0) throw InvalidParameter("barrier: lambda must be non-negative");
}

ReducedProblem adimensionalize(const BarrierSpec& spec) {
  const double v0 = std::sqrt(spec.v1 * spec.v1 + spec.v2 * spec.v2 + spec.v3 * spec.v3);
  if (!(v0 > 0.0)) throw InvalidParameter("adimensionalize: V0 = 0, no barrier");
  if (!(spec.energy > 0.0)) throw InvalidParameter("adimensionalize: energy must be positive");
  if (!(spec.length > 0.0)) throw InvalidParameter("adimensionalize: length must be positive");
  if (!(spec.mass > 0.0)) throw InvalidParameter("adimensionalize: mass must be positive");
  if (!(spec.hbar > 0.0)) throw InvalidParameter("adimensionalize: hbar must be positive");

  ReducedProblem out;
  out.barrier.vc = spec.v1 / v0;
  out.barrier.vq = std::hypot(spec.v2, spec.v3) / v0;
  out.barrier.theta = std::atan2(spec.v3, spec.v2);
  out.barrier.lambda = std::sqrt(2.0 * spec.mass * v0) / spec.hbar * spec.length;
  out.eps = std::sqrt(spec.energy / v0);
  return out;
}

WaveParams wave_params(double eps, const AdimensionalBarrier& b) {
  return basic_wave_params<cplx>(eps, b);
}

cplx beta_gamma_product(double eps, const AdimensionalBarrier& b) {
  const cplx e2(eps * eps);
  const cplx root = std::sqrt(e2 * e2 - cplx(b.vq * b.vq));
  const cplx d = e2 + root;
  return cplx(b.vq * b.vq) / (d * d);
}

}  // namespace qbarrier

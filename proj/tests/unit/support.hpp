#pragma once

#include <complex>

#include "qbarrier/quaternion.hpp"
#include "qbarrier/sampling.hpp"

namespace testing {

using qbarrier::cplx;
using qbarrier::Quaternion;

inline cplx random_complex(qbarrier::UniformRng& rng, double scale = 1.0) {
  return {rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
}

inline Quaternion random_quaternion(qbarrier::UniformRng& rng, double scale = 1.0) {
  return {random_complex(rng, scale), random_complex(rng, scale)};
}

inline double distance(const Quaternion& a, const Quaternion& b) { return qbarrier::norm(a - b); }

}  // namespace testing

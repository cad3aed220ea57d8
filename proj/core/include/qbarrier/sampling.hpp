#pragma once

// Seeded random parameter points.  Uniform variates are built from the raw
// 64-bit mt19937_64 stream, so a seed gives the same points with any standard
// library (std::uniform_real_distribution is implementation-defined).

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qbarrier/barrier.hpp"

namespace qbarrier {

class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : gen_(seed) {}

  /// [0, 1) with 53 random bits.
  double next() { return static_cast<double>(gen_() >> 11) * 0x1p-53; }
  /// [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }
  /// (lo, hi]
  double uniform_left_open(double lo, double hi) { return hi - (hi - lo) * next(); }
  /// (lo, hi)
  double uniform_open(double lo, double hi) {
    for (;;) {
      const double u = next();
      if (u > 0.0) return lo + (hi - lo) * u;
    }
  }

 private:
  std::mt19937_64 gen_;
};

struct GridPoint {
  double eps = 1.0;
  AdimensionalBarrier barrier;
};

struct GridRanges {
  double eps_lo = 0.2;
  double eps_hi = 3.0;
  double vc_lo = 0.0;
  double vc_hi = 1.0;
  double lambda_hi = 10.0;
  /// Points with |eps^4 - Vq^2| below this are redrawn.
  double degeneracy_band = 1e-6;
};

/// eps in (eps_lo, eps_hi), Vc in [vc_lo, vc_hi] with Vq = sqrt(1 - Vc^2),
/// theta in [0, 2 pi), lambda in (0, lambda_hi].
inline std::vector<GridPoint> random_grid(std::size_t count, std::uint64_t seed,
                                          const GridRanges& ranges = {}) {
  UniformRng rng(seed);
  std::vector<GridPoint> out;
  out.reserve(count);
  while (out.size() < count) {
    GridPoint p;
    p.eps = rng.uniform_open(ranges.eps_lo, ranges.eps_hi);
    const double vc = std::min(ranges.vc_hi, rng.uniform(ranges.vc_lo, std::nextafter(ranges.vc_hi, 2.0)));
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double lambda = rng.uniform_left_open(0.0, ranges.lambda_hi);
    p.barrier = AdimensionalBarrier::from_vc(vc, theta, lambda);
    const double e2 = p.eps * p.eps;
    if (std::abs(e2 * e2 - p.barrier.vq * p.barrier.vq) < ranges.degeneracy_band) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace qbarrier

#pragma once

// The diffusion/tunnelling threshold eps = 1 for the two extreme potentials,
// where the exponential zone-II basis degenerates.
//
//   complex (Vc, Vq) = (1, 0):  phi = A xi + B,  psi = C e^{sqrt2 xi} + D e^{-sqrt2 xi}
//   pure quaternionic (0, 1):   phi = A xi^3 + B xi^2 + C xi + D,
//                               psi = -i e^{-i theta} [A xi^3 + B xi^2 + (6A + C) xi + 2B + D]

#include <complex>

#include "qbarrier/quaternion.hpp"

namespace qbarrier {

enum class CriticalCase { complex_potential, pure_quaternionic };

struct CriticalZoneSolution {
  CriticalCase which = CriticalCase::complex_potential;
  double theta = 0.0;
  cplx a, b, c, d;

  /// phi + j psi at xi (0 <= xi <= lambda).
  Quaternion value(double xi) const;
};

struct CriticalAmplitudes {
  CriticalCase which = CriticalCase::complex_potential;
  cplx r;
  cplx t;
  cplx rt;  ///< R~
  cplx tt;  ///< T~
  CriticalZoneSolution zone2;
};

/// R = -i l / (2 - i l), T = 2 e^{-i l} / (2 - i l); R~ = T~ = 0.
CriticalAmplitudes critical_complex(double lambda);

/// R and T from closed rational formulas; R~, T~ and the cubic
/// coefficients from re-imposing continuity on the polynomial zone-II solution.
CriticalAmplitudes critical_quaternionic(double lambda, double theta = 0.0);

/// Common denominator 24 + 24(1-i) l - 18 i l^2 - 4 (1+i) l^3 - l^4.
cplx critical_quaternionic_denominator(double lambda);

/// Evaluates the zone-II solution stored in `solution` at xi.
Quaternion critical_zone2(double xi, const CriticalZoneSolution& solution);

enum class SeriesRegime { thin, thick };

struct SeriesModuli {
  double r = 0.0;  ///< |R| approximation
  double t = 0.0;  ///< |T| approximation
  /// lambda outside the regime (thin: lambda >= 0.3, thick: lambda <= 10).
  bool outside_regime = false;
};

/// Truncated thin/thick-barrier expansions of |R| and |T| at eps = 1.
SeriesModuli asymptotic_moduli(double lambda, SeriesRegime regime, CriticalCase which);

}  // namespace qbarrier

#pragma once

// Direct solution of the eight continuity conditions (value and derivative of
// the complex and j-parts at xi = 0 and xi = lambda).  This path never touches
// the transfer matrix, so it independently checks the closed formula for T.

#include <complex>

#include "qbarrier/barrier.hpp"
#include "qbarrier/quaternion.hpp"

namespace qbarrier {

inline constexpr double kResidualTolerance = 1e-9;

struct ScatteringAmplitudes {
  cplx r;   ///< R
  cplx rt;  ///< R~ (j-part, evanescent in zone I)
  cplx t;   ///< T
  cplx tt;  ///< T~ (j-part, evanescent in zone III)
  cplx a;   ///< zone-II coefficient of e^{a- xi}
  cplx b;   ///< zone-II coefficient of e^{-a- xi}
  cplx at;  ///< zone-II coefficient of e^{a+ xi}
  cplx bt;  ///< zone-II coefficient of e^{-a+ xi}
  /// Max-norm residual of the continuity equations.
  double residual = 0.0;
  /// Infinity-norm condition estimate of the (row/column scaled) system.
  double condition = 0.0;
};

/// Throws DegenerateParameters / ZeroAlphaMinus when the exponential basis
/// does not exist, SingularSystem when the elimination breaks down.
ScatteringAmplitudes solve(double eps, const AdimensionalBarrier& b);

enum class Zone { I, II, III };

struct ZoneWavefunction {
  Zone zone = Zone::I;
  Quaternion value;
  Quaternion derivative;
};

/// Phi and Phi' at xi: zone I for xi < 0, zone II for 0 <= xi <= lambda,
/// zone III beyond.
ZoneWavefunction wavefunction(double xi, const ScatteringAmplitudes& amps, const WaveParams& p,
                              const AdimensionalBarrier& b);

/// Real part of conj(Phi) i Phi' + h.c.; constant in xi for a stationary state.
double probability_current(const Quaternion& value, const Quaternion& derivative);

/// 1 - |R|^2 - |T|^2.
double probability_balance(const ScatteringAmplitudes& amps);

}  // namespace qbarrier

#pragma once

// Brute-force reference for the scattering amplitudes.  The zone-II equation
//
//   i Phi'' = i Vc Phi + j Vq e^{-i theta} Phi - eps^2 Phi i,   Phi = phi + j psi,
//
// splits (using j z = conj(z) j) into the complex-linear pair
//
//   phi'' = (Vc - eps^2) phi + i Vq e^{+i theta} psi
//   psi'' = i Vq e^{-i theta} phi + (Vc + eps^2) psi
//
// which is integrated with classical fixed-step RK4 as a first-order system in
// y = (phi, phi', psi, psi').  No closed formula is used anywhere here.

#include <array>
#include <complex>

#include "qbarrier/barrier.hpp"
#include "qbarrier/linalg.hpp"

namespace qbarrier {

inline constexpr int kDefaultOracleSteps = 4096;
inline constexpr int kMinOracleSteps = 1000;
inline constexpr double kMaxOracleLambda = 30.0;
inline constexpr double kOracleConvergenceTolerance = 1e-7;

using OdeState = std::array<cplx, 4>;

/// y' = K y with y = (phi, phi', psi, psi').
struct CoupledSystem {
  CMatrix<4> generator;

  OdeState rhs(const OdeState& y) const { return generator * y; }
  /// Residual of the second-order pair for given (phi, psi) and second derivatives.
  std::array<cplx, 2> residual(cplx phi, cplx psi, cplx d2phi, cplx d2psi) const {
    return {d2phi - generator(1, 0) * phi - generator(1, 2) * psi,
            d2psi - generator(3, 0) * phi - generator(3, 2) * psi};
  }
};

CoupledSystem split_ode(const AdimensionalBarrier& b, double eps);

/// Propagation map over a length: column c holds the solution at the end when
/// started from the c-th canonical unit vector.
struct PropagatedBasis {
  CMatrix<4> map;
  double length = 0.0;
  int steps = 0;

  cplx determinant() const { return qbarrier::determinant(map); }
};

PropagatedBasis propagate_basis(const CoupledSystem& sys, double length, int steps);

/// Single trajectory from y0 over `length` (which may be negative).
OdeState propagate(const CoupledSystem& sys, const OdeState& y0, double length, int steps);

struct OracleResult {
  cplx r;
  cplx rt;
  cplx t;
  cplx tt;
  int steps = 0;
  int segments = 0;
  /// |T(steps) - T(2 steps)|
  double convergence_delta = 0.0;
  bool converged = false;
};

struct OracleOptions {
  int steps = kDefaultOracleSteps;
  /// Also run with 2 * steps and report the change in T.
  bool check_convergence = true;
};

/// Matches y(0) to the zone-I form (1 + R, i eps (1 - R), R~, eps R~) and
/// y(lambda) to the zone-III form (T e^{i eps l}, i eps T e^{i eps l}, T~ e^{-eps l},
/// -eps T~ e^{-eps l}).  The interval is cut into segments of bounded growth and
/// the segment maps are chained in one block system (multiple shooting), which
/// keeps the solve well-conditioned when e^{alpha lambda} is large.
/// Throws InvalidParameter for steps < 1000, lambda > 30 or eps <= 0.
OracleResult oracle_amplitudes(double eps, const AdimensionalBarrier& b, OracleOptions options = {});

}  // namespace qbarrier

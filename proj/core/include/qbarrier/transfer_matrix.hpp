#pragma once

// Transfer matrix M = G Delta G^-1 relating the boundary data at xi = lambda to
// the data at xi = 0:
//
//   F (1, R, R~, R~)^T = M (T e^{i eps lambda}, i eps/a- T e^{i eps lambda},
//                           T~ e^{-eps lambda}, -eps/a- T~ e^{-eps lambda})^T.
//
// M is available two ways: from its closed element table (transfer_closed) and
// by explicit inversion and multiplication (transfer_numeric).  The two must
// agree; the test suite holds them to each other.

#include <array>
#include <complex>
#include <string>

#include "qbarrier/barrier.hpp"
#include "qbarrier/linalg.hpp"

namespace qbarrier {

inline constexpr double kIllConditionedTolerance = 1e-12;
/// Condition estimate of G above which Factors::ill_conditioned is set.
inline constexpr double kConditionWarning = 1e8;

template <class C>
using BasicTransferMatrix = SquareMatrix<C, 4>;
using TransferMatrix = BasicTransferMatrix<cplx>;

template <class C>
struct BasicFactors {
  SquareMatrix<C, 4> f;
  SquareMatrix<C, 4> g;
  SquareMatrix<C, 4> delta;
  /// Max-norm of G times max-norm of G^-1.
  double condition = 0.0;
  bool ill_conditioned = false;
};

using Factors = BasicFactors<cplx>;

namespace detail {

template <class C>
void require_nonzero_alphas(const BasicWaveParams<C>& p) {
  if (magnitude(p.alpha_minus) <= kZeroAlphaTolerance) {
    throw ZeroAlphaMinus("alpha_- = 0 (eps = 1 with Vc > 0): exponential basis collapses");
  }
  if (magnitude(p.alpha_plus) <= kZeroAlphaTolerance) {
    throw DegenerateParameters("alpha_+ = 0: exponential basis collapses");
  }
}

template <class C>
void require_well_posed_g(const BasicWaveParams<C>& p) {
  if (magnitude(C(1.0) - p.beta * p.gamma) < kIllConditionedTolerance) {
    throw IllConditioned("|1 - beta gamma| < 1e-12: G is singular");
  }
}

}  // namespace detail

/// F, G and Delta_lambda = diag{e^{-a- l}, e^{a- l}, e^{-a+ l}, e^{a+ l}}.
template <class C>
BasicFactors<C> basic_build_factors(const BasicWaveParams<C>& p, double lambda) {
  detail::require_nonzero_alphas(p);
  detail::require_well_posed_g(p);

  const C i(0.0, 1.0);
  const C kappa = C(p.eps) / p.alpha_minus;
  const C ratio = p.alpha_plus / p.alpha_minus;
  const C lam(lambda);

  BasicFactors<C> out;
  auto& f = out.f;
  f(0, 0) = C(1.0);
  f(0, 1) = C(1.0);
  f(1, 0) = i * kappa;
  f(1, 1) = -(i * kappa);
  f(2, 2) = C(1.0);
  f(3, 3) = kappa;

  auto& g = out.g;
  const C br = p.beta * ratio;
  g(0, 0) = C(1.0);
  g(0, 1) = C(1.0);
  g(0, 2) = p.beta;
  g(0, 3) = p.beta;
  g(1, 0) = C(1.0);
  g(1, 1) = C(-1.0);
  g(1, 2) = br;
  g(1, 3) = -br;
  g(2, 0) = p.gamma;
  g(2, 1) = p.gamma;
  g(2, 2) = C(1.0);
  g(2, 3) = C(1.0);
  g(3, 0) = p.gamma;
  g(3, 1) = -p.gamma;
  g(3, 2) = ratio;
  g(3, 3) = -ratio;

  out.delta = SquareMatrix<C, 4>::diagonal({exp(-(p.alpha_minus * lam)), exp(p.alpha_minus * lam),
                                            exp(-(p.alpha_plus * lam)), exp(p.alpha_plus * lam)});

  const auto g_inv = inverse(g);
  out.condition = g.max_abs() * g_inv.max_abs();
  out.ill_conditioned = out.condition > kConditionWarning;
  return out;
}

/// All sixteen elements of M from the closed table, with common prefactor
/// 1/(1 - beta gamma), a+- = a+/a- and a-+ = a-/a+.
template <class C>
BasicTransferMatrix<C> basic_transfer_closed(const BasicWaveParams<C>& p, double lambda) {
  detail::require_nonzero_alphas(p);
  detail::require_well_posed_g(p);

  const C lam(lambda);
  const C& b = p.beta;
  const C& g = p.gamma;
  const C bg = b * g;
  const C pm = p.alpha_plus / p.alpha_minus;  // alpha_{+-}
  const C mp = p.alpha_minus / p.alpha_plus;  // alpha_{-+}
  const C ch_m = cosh(p.alpha_minus * lam);
  const C sh_m = sinh(p.alpha_minus * lam);
  const C ch_p = cosh(p.alpha_plus * lam);
  const C sh_p = sinh(p.alpha_plus * lam);
  const C s = C(1.0) / (C(1.0) - bg);

  BasicTransferMatrix<C> m;
  m(0, 0) = (ch_m - bg * ch_p) * s;
  m(0, 1) = (-sh_m + mp * bg * sh_p) * s;
  m(0, 2) = -(b * (ch_m - ch_p)) * s;
  m(0, 3) = b * (sh_m - mp * sh_p) * s;

  m(1, 0) = (-sh_m + pm * bg * sh_p) * s;
  m(1, 1) = (ch_m - bg * ch_p) * s;
  m(1, 2) = b * (sh_m - pm * sh_p) * s;
  m(1, 3) = -(b * (ch_m - ch_p)) * s;

  m(2, 0) = g * (ch_m - ch_p) * s;
  m(2, 1) = -(g * (sh_m - mp * sh_p)) * s;
  m(2, 2) = (-(bg * ch_m) + ch_p) * s;
  m(2, 3) = (bg * sh_m - mp * sh_p) * s;

  m(3, 0) = -(g * (sh_m - pm * sh_p)) * s;
  m(3, 1) = g * (ch_m - ch_p) * s;
  m(3, 2) = (bg * sh_m - pm * sh_p) * s;
  m(3, 3) = (-(bg * ch_m) + ch_p) * s;
  return m;
}

/// M = G Delta G^-1 by explicit LU inversion.
template <class C>
BasicTransferMatrix<C> basic_transfer_numeric(const BasicWaveParams<C>& p, double lambda) {
  const auto fac = basic_build_factors(p, lambda);
  return fac.g * fac.delta * inverse(fac.g);
}

Factors build_factors(const WaveParams& p, double lambda);
TransferMatrix transfer_closed(const WaveParams& p, double lambda);
TransferMatrix transfer_numeric(const WaveParams& p, double lambda);

/// Both constructions evaluated in binary128; returns max_ij |M_closed - M_numeric|.
double transfer_discrepancy_binary128(double eps, const AdimensionalBarrier& b);

}  // namespace qbarrier

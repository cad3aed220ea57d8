#pragma once

// Closed transmission amplitude T = 2 e^{-i eps lambda} / D, with D built from
// the elements of the transfer matrix.
//
// In binary64 the formula loses digits for wide barriers: D1 and the
// correction S N / Dp each carry beta*gamma*e^{alpha_+ lambda} terms that
// cancel, leaving an O(1) result.  transmission() therefore evaluates the
// whole chain (wave parameters, M, D) in binary128 by default.

#include <complex>

#include "qbarrier/barrier.hpp"
#include "qbarrier/transfer_matrix.hpp"

namespace qbarrier {

enum class Precision { binary64, binary128 };

struct TransmissionResult {
  cplx t;
  /// |T|^2
  double prob = 0.0;
  /// arg T in (-pi, pi]
  double phase = 0.0;
};

TransmissionResult make_transmission_result(cplx t);

/// D = M11 + M22 + i (eps^2 M12 - a-^2 M21)/(eps a-)
///     - (M13 + i M24 - (eps^2 M14 + i a-^2 M23)/(eps a-))
///       * (M31 - i M42 + (i eps^2 M32 - a-^2 M41)/(eps a-))
///       / (M44 + M33 - (eps^2 M34 + a-^2 M43)/(eps a-)).
/// Throws SingularSystem when the trailing denominator vanishes.
template <class C>
C basic_denominator(const BasicTransferMatrix<C>& m, double eps, const C& alpha_minus) {
  const C i(0.0, 1.0);
  const C e(eps);
  const C e2 = e * e;
  const C a2 = alpha_minus * alpha_minus;
  const C ea = e * alpha_minus;
  auto M = [&m](int r, int c) -> const C& { return m(r - 1, c - 1); };

  const C head = M(1, 1) + M(2, 2) + i * (e2 * M(1, 2) - a2 * M(2, 1)) / ea;
  const C left = M(1, 3) + i * M(2, 4) - (e2 * M(1, 4) + i * a2 * M(2, 3)) / ea;
  const C right = M(3, 1) - i * M(4, 2) + (i * e2 * M(3, 2) - a2 * M(4, 1)) / ea;
  const C inner = M(4, 4) + M(3, 3) - (e2 * M(3, 4) + a2 * M(4, 3)) / ea;
  if (detail::magnitude(inner) == 0.0) {
    throw SingularSystem("transmission denominator: inner factor vanishes at eps = " +
                         std::to_string(eps));
  }
  return head - left * right / inner;
}

cplx denominator(const TransferMatrix& m, double eps, cplx alpha_minus);

/// T from the closed formula.  Throws DegenerateParameters, ZeroAlphaMinus or
/// IllConditioned where the exponential basis does not exist; see
/// critical_energy.hpp for the eps = 1 extremes.
TransmissionResult transmission(double eps, const AdimensionalBarrier& b,
                                Precision precision = Precision::binary128);

/// D evaluated along the same path as transmission().
cplx transmission_denominator(double eps, const AdimensionalBarrier& b,
                              Precision precision = Precision::binary128);

/// Complex-potential (Vc, Vq) = (1, 0) amplitude: cos/sin form for eps > 1,
/// cosh/sinh form for eps < 1.  Throws ZeroAlphaMinus at eps = 1.
TransmissionResult transmission_complex(double eps, double lambda);

/// |T_c|^2 = [1 + sin^2(sqrt(eps^2-1) lambda) / (4 eps^2 (eps^2-1))]^-1 for eps > 1, and the
/// sinh^2 analogue with (1 - eps^2) for eps < 1.
double transmission_complex_probability(double eps, double lambda);

}  // namespace qbarrier

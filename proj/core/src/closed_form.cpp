#include "qbarrier/closed_form.hpp"

#include <cmath>
#include <numbers>

namespace qbarrier {

namespace {

template <class C>
C amplitude(double eps, const AdimensionalBarrier& b) {
  const auto p = basic_wave_params<C>(eps, b);
  const auto m = basic_transfer_closed(p, b.lambda);
  const C d = basic_denominator(m, eps, p.alpha_minus);
  const C i(0.0, 1.0);
  return C(2.0) * exp(-(i * C(eps) * C(b.lambda))) / d;
}

template <class C>
C denominator_along(double eps, const AdimensionalBarrier& b) {
  const auto p = basic_wave_params<C>(eps, b);
  return basic_denominator(basic_transfer_closed(p, b.lambda), eps, p.alpha_minus);
}

void check_inputs(double eps, const AdimensionalBarrier& b) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InvalidParameter("transmission: eps must be positive");
  if (!(b.lambda >= 0.0) || !std::isfinite(b.lambda)) {
    throw InvalidParameter("transmission: lambda must be non-negative");
  }
}

}  // namespace

TransmissionResult make_transmission_result(cplx t) {
  TransmissionResult r;
  r.t = t;
  r.prob = std::norm(t);
  r.phase = std::arg(t);
  if (r.phase <= -std::numbers::pi) r.phase = std::numbers::pi;
  return r;
}

cplx denominator(const TransferMatrix& m, double eps, cplx alpha_minus) {
  return basic_denominator(m, eps, alpha_minus);
}

TransmissionResult transmission(double eps, const AdimensionalBarrier& b, Precision precision) {
  check_inputs(eps, b);
  const cplx t = precision == Precision::binary128 ? to_double(amplitude<Complex128>(eps, b))
                                                   : amplitude<cplx>(eps, b);
  return make_transmission_result(t);
}

cplx transmission_denominator(double eps, const AdimensionalBarrier& b, Precision precision) {
  check_inputs(eps, b);
  return precision == Precision::binary128 ? to_double(denominator_along<Complex128>(eps, b))
                                           : denominator_along<cplx>(eps, b);
}

TransmissionResult transmission_complex(double eps, double lambda) {
  if (!(eps > 0.0)) throw InvalidParameter("transmission_complex: eps must be positive");
  if (!(lambda >= 0.0)) throw InvalidParameter("transmission_complex: lambda must be non-negative");
  if (eps == 1.0) throw ZeroAlphaMinus("transmission_complex: eps = 1, use critical_complex");
  const cplx i(0.0, 1.0);
  const double e2 = eps * eps;
  cplx bracket;
  if (eps > 1.0) {
    const double k = std::sqrt(e2 - 1.0);
    bracket = std::cos(k * lambda) + i * ((1.0 - 2.0 * e2) / (2.0 * eps * k)) * std::sin(k * lambda);
  } else {
    const double k = std::sqrt(1.0 - e2);
    bracket = std::cosh(k * lambda) + i * ((1.0 - 2.0 * e2) / (2.0 * eps * k)) * std::sinh(k * lambda);
  }
  return make_transmission_result(std::exp(-i * eps * lambda) / bracket);
}

double transmission_complex_probability(double eps, double lambda) {
  if (eps == 1.0) throw ZeroAlphaMinus("transmission_complex_probability: eps = 1");
  const double e2 = eps * eps;
  if (eps > 1.0) {
    const double s = std::sin(std::sqrt(e2 - 1.0) * lambda);
    return 1.0 / (1.0 + s * s / (4.0 * e2 * (e2 - 1.0)));
  }
  const double s = std::sinh(std::sqrt(1.0 - e2) * lambda);
  return 1.0 / (1.0 + s * s / (4.0 * e2 * (1.0 - e2)));
}

}  // namespace qbarrier

#include "qbarrier/evaluate.hpp"

#include <algorithm>
#include <cmath>

#include "qbarrier/critical_energy.hpp"
#include "qbarrier/linear_solver.hpp"
#include "qbarrier/ode_oracle.hpp"

namespace qbarrier {

namespace {
constexpr double kExact = 1e-12;
}

const char* to_string(Method m) {
  switch (m) {
    case Method::closed_form:
      return "closed_form";
    case Method::linear_solver:
      return "linear_solver";
    case Method::critical_complex:
      return "critical_complex";
    case Method::critical_quaternionic:
      return "critical_quaternionic";
    case Method::ode_oracle:
      return "ode_oracle";
  }
  return "unknown";
}

bool is_critical_complex(double eps, const AdimensionalBarrier& b) {
  return std::abs(eps - 1.0) <= kExact && std::abs(b.vc - 1.0) <= kExact && b.vq <= kExact;
}

bool is_critical_quaternionic(double eps, const AdimensionalBarrier& b) {
  return std::abs(eps - 1.0) <= kExact && std::abs(b.vc) <= kExact && std::abs(b.vq - 1.0) <= kExact;
}

bool closed_form_reliable(double eps, const AdimensionalBarrier& b) {
  const auto p = wave_params(eps, b);
  const double growth = std::max(std::abs(p.alpha_plus.real()), std::abs(p.alpha_minus.real()));
  return growth * b.lambda <= kClosedFormGrowthBudget;
}

Evaluation evaluate_transmission(double eps, const AdimensionalBarrier& b) {
  if (is_critical_complex(eps, b)) {
    return {make_transmission_result(critical_complex(b.lambda).t), Method::critical_complex};
  }
  if (is_critical_quaternionic(eps, b)) {
    return {make_transmission_result(critical_quaternionic(b.lambda, b.theta).t),
            Method::critical_quaternionic};
  }
  try {
    if (!closed_form_reliable(eps, b)) {
      return {make_transmission_result(solve(eps, b).t), Method::linear_solver};
    }
    return {transmission(eps, b), Method::closed_form};
  } catch (const DegenerateParameters&) {
  } catch (const ZeroAlphaMinus&) {
  } catch (const IllConditioned&) {
  }
  OracleOptions opts;
  opts.check_convergence = false;
  return {make_transmission_result(oracle_amplitudes(eps, b, opts).t), Method::ode_oracle};
}

}  // namespace qbarrier

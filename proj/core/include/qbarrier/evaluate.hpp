#pragma once

#include "qbarrier/barrier.hpp"
#include "qbarrier/closed_form.hpp"

namespace qbarrier {

enum class Method { closed_form, linear_solver, critical_complex, critical_quaternionic, ode_oracle };

const char* to_string(Method m);

struct Evaluation {
  TransmissionResult result;
  Method method = Method::closed_form;
};

/// Largest lambda * max|Re alpha_pm| for which the closed formula is used.  The
/// formula cancels terms of size e^{lambda Re alpha}; past this the binary128
/// evaluation keeps fewer than ~12 digits.
inline constexpr double kClosedFormGrowthBudget = 40.0;

/// Closed formula where the exponential basis exists and the barrier is not
/// too opaque; the direct linear system for wider barriers; at eps = 1 the
/// exact critical amplitudes for (Vc, Vq) = (1, 0) or (0, 1); otherwise
/// (degenerate band, alpha_- = 0 for mixed potentials) the ODE oracle.
Evaluation evaluate_transmission(double eps, const AdimensionalBarrier& b);

/// True when (Vc, Vq, eps) sits exactly on one of the two critical extremes.
bool is_critical_complex(double eps, const AdimensionalBarrier& b);
bool is_critical_quaternionic(double eps, const AdimensionalBarrier& b);

/// lambda * max|Re alpha_pm| within kClosedFormGrowthBudget.  Throws like
/// wave_params on degenerate input.
bool closed_form_reliable(double eps, const AdimensionalBarrier& b);

}  // namespace qbarrier

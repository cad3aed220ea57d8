#include "qbarrier_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qbarrier/closed_form.hpp"
#include "qbarrier/critical_energy.hpp"
#include "qbarrier/linear_solver.hpp"
#include "qbarrier/ode_oracle.hpp"
#include "qbarrier/parallel.hpp"
#include "qbarrier/sampling.hpp"
#include "qbarrier/transfer_matrix.hpp"

namespace qbarrier::cli {

namespace {

// Accumulates the worst deviation; an exception during a sample counts as an
// infinite deviation.
class Check {
 public:
  Check(std::string name, double tolerance) {
    r_.name = std::move(name);
    r_.tolerance = tolerance;
  }

  void add(double deviation) {
    ++r_.samples;
    if (!(deviation <= r_.worst)) r_.worst = std::isnan(deviation) ? std::numeric_limits<double>::infinity() : deviation;
  }
  void fail(const std::string& why) {
    ++r_.samples;
    r_.worst = std::numeric_limits<double>::infinity();
    if (r_.detail.empty()) r_.detail = why;
  }
  CheckResult finish() {
    r_.passed = r_.samples > 0 && r_.worst < r_.tolerance;
    return r_;
  }

 private:
  CheckResult r_;
};

struct PointData {
  double balance = 0.0;
  double theta_shift = 0.0;
  double m_discrepancy = 0.0;
  double solver_gap = 0.0;
  double oracle_gap = -1.0;
  std::string error;
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const auto grid = random_grid(options.samples, options.seed);
  const std::size_t n_oracle = std::min(options.samples, options.oracle_samples);

  const auto data = parallel_map<PointData>(grid.size(), [&](std::size_t k) {
    PointData d;
    const auto& [eps, b] = grid[k];
    try {
      const auto closed = transmission(eps, b);
      const auto amps = solve(eps, b);
      d.balance = std::abs(probability_balance(amps));
      d.solver_gap = std::abs(closed.t - amps.t);
      AdimensionalBarrier b0 = b;
      b0.theta = 0.0;
      d.theta_shift = std::abs(transmission(eps, b0).t - closed.t);
      d.m_discrepancy = transfer_discrepancy_binary128(eps, b);
      if (k < n_oracle) d.oracle_gap = std::abs(closed.t - oracle_amplitudes(eps, b).t);
    } catch (const std::exception& e) {
      d.error = "eps=" + std::to_string(eps) + " vc=" + std::to_string(b.vc) + ": " + e.what();
    }
    return d;
  }, 8);

  Check balance("norm_conservation", 1e-9);
  Check theta("theta_invariance", 1e-12);
  Check matrix("transfer_closed_vs_numeric", 1e-10);
  Check solver("closed_vs_solver", 1e-9);
  Check oracle("closed_vs_oracle", 1e-6);
  for (const auto& d : data) {
    if (!d.error.empty()) {
      for (Check* c : {&balance, &theta, &matrix, &solver}) c->fail(d.error);
      continue;
    }
    balance.add(d.balance);
    theta.add(d.theta_shift);
    matrix.add(d.m_discrepancy);
    solver.add(d.solver_gap);
    if (d.oracle_gap >= 0.0) oracle.add(d.oracle_gap);
  }

  // Complex potential against its own closed amplitude, both sides of eps = 1.
  Check complex_limit("complex_limit", 1e-10);
  {
    UniformRng rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t k = 0; k < 100; ++k) {
      const double eps = k % 2 ? rng.uniform(1.01, 3.0) : rng.uniform(0.2, 0.99);
      const double lambda = rng.uniform_left_open(0.0, 10.0);
      try {
        const auto t = transmission(eps, {1.0, 0.0, 0.0, lambda}).t;
        complex_limit.add(std::abs(t - transmission_complex(eps, lambda).t));
      } catch (const std::exception& e) {
        complex_limit.fail(e.what());
      }
    }
  }

  // Critical amplitudes against the oracle with eps = 1 exactly.
  Check critical("critical_vs_oracle", 1e-6);
  for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
    try {
      const auto q = critical_quaternionic(lambda, 0.3);
      const auto oq = oracle_amplitudes(1.0, {0.0, 1.0, 0.3, lambda});
      critical.add(std::max({std::abs(q.t - oq.t), std::abs(q.r - oq.r), std::abs(q.rt - oq.rt),
                             std::abs(q.tt - oq.tt)}));
      const auto c = critical_complex(lambda);
      const auto oc = oracle_amplitudes(1.0, {1.0, 0.0, 0.0, lambda});
      critical.add(std::max(std::abs(c.t - oc.t), std::abs(c.r - oc.r)));
    } catch (const std::exception& e) {
      critical.fail(e.what());
    }
  }

  // Truncated series: thin error below lambda^5, thick error below 50 lambda^-5.
  Check series("series", 1.0);
  for (auto which : {CriticalCase::complex_potential, CriticalCase::pure_quaternionic}) {
    auto exact = [which](double l) {
      const auto a = which == CriticalCase::complex_potential ? critical_complex(l) : critical_quaternionic(l);
      return std::pair{std::abs(a.r), std::abs(a.t)};
    };
    for (auto [regime, lambda, bound] : {std::tuple{SeriesRegime::thin, 0.05, std::pow(0.05, 5)},
                                         std::tuple{SeriesRegime::thick, 40.0, 50.0 * std::pow(40.0, -5)}}) {
      const auto [er, et] = exact(lambda);
      const auto s = asymptotic_moduli(lambda, regime, which);
      series.add(std::max(std::abs(er - s.r), std::abs(et - s.t)) / bound);
    }
  }

  return {balance.finish(), theta.finish(), matrix.finish(), solver.finish(), oracle.finish(),
          complex_limit.finish(), critical.finish(), series.finish()};
}

}  // namespace qbarrier::cli

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qbarrier/closed_form.hpp"
#include "qbarrier/critical_energy.hpp"
#include "qbarrier/linear_solver.hpp"
#include "qbarrier/ode_oracle.hpp"
#include "qbarrier/sampling.hpp"
#include "support.hpp"

using namespace qbarrier;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("ode_oracle") {
  TEST_CASE("complex potential decouples") {
    const double eps = 1.3;
    const auto sys = split_ode({1.0, 0.0, 0.4, 1.0}, eps);
    const auto& k = sys.generator;
    CHECK(k(1, 0) == cplx(1.0 - eps * eps));
    CHECK(k(3, 2) == cplx(1.0 + eps * eps));
    CHECK(k(1, 2) == cplx(0.0));
    CHECK(k(3, 0) == cplx(0.0));
  }

  TEST_CASE("exponential zone-II solution satisfies the split system") {
    UniformRng rng(89);
    for (const auto& [eps, b] : random_grid(50, 97, {.lambda_hi = 3.0})) {
      const auto p = wave_params(eps, b);
      const auto sys = split_ode(b, eps);
      const cplx A = testing::random_complex(rng), B = testing::random_complex(rng);
      const cplx At = testing::random_complex(rng), Bt = testing::random_complex(rng);
      for (int n = 0; n < 10; ++n) {
        const double xi = rng.uniform(0.0, b.lambda);
        const cplx em = std::exp(p.alpha_minus * xi), emi = std::exp(-p.alpha_minus * xi);
        const cplx ep = std::exp(p.alpha_plus * xi), epi = std::exp(-p.alpha_plus * xi);
        const cplx f = A * em + B * emi;
        const cplx g = At * ep + Bt * epi;
        const cplx f2 = p.alpha_minus * p.alpha_minus * f;
        const cplx g2 = p.alpha_plus * p.alpha_plus * g;
        const auto res = sys.residual(f + p.beta * g, p.gamma * f + g, f2 + p.beta * g2, p.gamma * f2 + g2);
        const double scale = std::max(1.0, std::abs(f2) + std::abs(g2));
        CHECK(std::abs(res[0]) < 1e-9 * scale);
        CHECK(std::abs(res[1]) < 1e-9 * scale);
      }
    }
  }

  TEST_CASE("polynomial solution at eps = 1, Vq = 1 satisfies the split system") {
    UniformRng rng(101);
    const double theta = 0.8;
    const auto sys = split_ode({0.0, 1.0, theta, 1.0}, 1.0);
    CriticalZoneSolution s;
    s.which = CriticalCase::pure_quaternionic;
    s.theta = theta;
    s.a = testing::random_complex(rng);
    s.b = testing::random_complex(rng);
    s.c = testing::random_complex(rng);
    s.d = testing::random_complex(rng);
    const cplx u = -cplx(0.0, 1.0) * std::exp(-cplx(0.0, 1.0) * theta);
    for (double xi : {0.0, 0.3, 1.1, 2.5}) {
      const auto q = s.value(xi);
      const cplx d2phi = 6.0 * s.a * xi + 2.0 * s.b;
      const auto res = sys.residual(q.z(), q.w(), d2phi, u * d2phi);
      CHECK(std::abs(res[0]) < 1e-12);
      CHECK(std::abs(res[1]) < 1e-12);
    }
  }

  TEST_CASE("complex resonance") {
    const auto o = oracle_amplitudes(std::sqrt(2.0), {1.0, 0.0, 0.0, 2.0 * kPi});
    CHECK(std::norm(o.t) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(o.converged);
  }

  TEST_CASE("critical quaternionic amplitudes") {
    const auto o = oracle_amplitudes(1.0, {0.0, 1.0, 0.0, 1.0});
    const auto c = critical_quaternionic(1.0, 0.0);
    CHECK(std::abs(o.t - c.t) < 1e-6);
    CHECK(std::abs(o.r - c.r) < 1e-6);
  }

  TEST_CASE("table peak for (1/2, sqrt3/2) at lambda = 3 pi") {
    const AdimensionalBarrier b{0.5, std::sqrt(3.0) / 2, 0.0, 3.0 * kPi};
    const double at = std::norm(oracle_amplitudes(1.145, b).t);
    CHECK(at > std::norm(oracle_amplitudes(1.135, b).t));
    CHECK(at > std::norm(oracle_amplitudes(1.155, b).t));
    CHECK(at > 0.9);
  }

  TEST_CASE("agrees with the linear solver") {
    for (const auto& [eps, b] : random_grid(100, 103)) {
      const auto o = oracle_amplitudes(eps, b);
      const auto s = solve(eps, b);
      CHECK(std::abs(o.t - s.t) < 1e-6);
      CHECK(std::abs(o.r - s.r) < 1e-6);
      CHECK(std::abs(o.rt - s.rt) < 1e-6);
      CHECK(std::abs(o.tt - s.tt) < 1e-6 * std::max(1.0, std::abs(s.tt)));
      CHECK(o.convergence_delta < kOracleConvergenceTolerance);
    }
  }

  TEST_CASE("inside the degeneracy band") {
    // eps^4 = Vq^2: only the oracle applies directly; the closed formula is
    // evaluated symmetrically on both sides.
    const double vq = 0.8;
    const AdimensionalBarrier b{0.6, vq, 0.3, 2.5};
    const double eps = std::sqrt(vq);
    const double h = 1e-4;
    const cplx closed = 0.5 * (transmission(eps - h, b).t + transmission(eps + h, b).t);
    CHECK(std::abs(oracle_amplitudes(eps, b).t - closed) < 1e-6);
  }

  TEST_CASE("fourth-order convergence") {
    const AdimensionalBarrier b{0.3, std::sqrt(0.91), 0.5, 1.0};
    const auto sys = split_ode(b, 1.7);
    const OdeState y0{1.0, cplx(0.0, 1.0), 0.5, -0.2};
    const double length = 2.0;
    const auto y1 = propagate(sys, y0, length, 40);
    const auto y2 = propagate(sys, y0, length, 80);
    const auto y3 = propagate(sys, y0, length, 160);
    double e12 = 0.0, e23 = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      e12 = std::max(e12, std::abs(y1[k] - y2[k]));
      e23 = std::max(e23, std::abs(y2[k] - y3[k]));
    }
    CHECK(e12 / e23 == doctest::Approx(16.0).epsilon(0.1));
  }

  TEST_CASE("propagation map has unit determinant") {
    for (const auto& [eps, b] : random_grid(30, 107, {.lambda_hi = 2.0})) {
      const auto basis = propagate_basis(split_ode(b, eps), b.lambda, 4096);
      CHECK(std::abs(basis.determinant()) == doctest::Approx(1.0).epsilon(1e-8));
    }
  }

  TEST_CASE("backwards propagation inverts forwards") {
    const auto sys = split_ode({0.5, std::sqrt(0.75), 1.0, 1.0}, 0.9);
    const OdeState y0{1.0, 2.0, cplx(0.0, 1.0), 0.0};
    const auto back = propagate(sys, propagate(sys, y0, 1.5, 2000), -1.5, 2000);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(back[k] - y0[k]) < 1e-10);
  }

  TEST_CASE("input checks") {
    const AdimensionalBarrier b{1.0, 0.0, 0.0, 1.0};
    OracleOptions few;
    few.steps = 999;
    CHECK_THROWS_AS(oracle_amplitudes(1.2, b, few), InvalidParameter);
    CHECK_THROWS_AS(oracle_amplitudes(1.2, {1.0, 0.0, 0.0, 30.5}), InvalidParameter);
    CHECK_THROWS_AS(oracle_amplitudes(0.0, b), InvalidParameter);
    CHECK_NOTHROW(oracle_amplitudes(1.2, {1.0, 0.0, 0.0, 30.0}));
    const auto zero = oracle_amplitudes(1.2, {0.0, 1.0, 0.0, 0.0});
    CHECK(std::abs(zero.t - 1.0) < 1e-14);
  }
}

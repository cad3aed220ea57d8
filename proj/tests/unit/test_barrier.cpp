#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qbarrier/barrier.hpp"
#include "qbarrier/sampling.hpp"

using namespace qbarrier;

namespace {
constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);
}  // namespace

TEST_SUITE("barrier") {
  TEST_CASE("adimensionalize: pure complex potential") {
    BarrierSpec s;
    s.v1 = 2.5;
    s.length = 1.0;
    s.energy = 1.0;
    const auto r = adimensionalize(s);
    CHECK(r.barrier.vc == doctest::Approx(1.0));
    CHECK(r.barrier.vq == doctest::Approx(0.0));
    CHECK(r.barrier.theta == 0.0);
  }

  TEST_CASE("adimensionalize: symmetric quaternionic potential") {
    BarrierSpec s;
    s.v2 = 1.0 / std::sqrt(2.0);
    s.v3 = 1.0 / std::sqrt(2.0);
    s.length = 1.0;
    s.energy = 1.0;
    const auto r = adimensionalize(s);
    CHECK(r.barrier.vc == doctest::Approx(0.0));
    CHECK(r.barrier.vq == doctest::Approx(1.0));
    CHECK(r.barrier.theta == doctest::Approx(kPi / 4));
  }

  TEST_CASE("adimensionalize: width and energy scaling") {
    BarrierSpec s;
    s.v1 = 1.0;
    s.length = 3.0 * kPi;
    s.energy = 2.0;
    const auto r = adimensionalize(s);
    // lambda = sqrt(2 m V0) L / hbar with m = hbar = V0 = 1.
    CHECK(r.barrier.lambda == doctest::Approx(std::sqrt(2.0) * 3.0 * kPi));
    CHECK(r.eps == doctest::Approx(std::sqrt(2.0)));

    // Same problem in other units: scale m by 4 and L by 1/2.
    s.mass = 4.0;
    s.length = 1.5 * kPi;
    CHECK(adimensionalize(s).barrier.lambda == doctest::Approx(std::sqrt(2.0) * 3.0 * kPi));
  }

  TEST_CASE("adimensionalize: theta handles V2 = 0") {
    BarrierSpec s;
    s.v3 = -1.0;
    s.length = 1.0;
    s.energy = 1.0;
    CHECK(adimensionalize(s).barrier.theta == doctest::Approx(-kPi / 2));
  }

  TEST_CASE("adimensionalize: rejects invalid input") {
    BarrierSpec s;
    s.length = 1.0;
    s.energy = 1.0;
    CHECK_THROWS_AS(adimensionalize(s), InvalidParameter);
    s.v1 = 1.0;
    s.energy = 0.0;
    CHECK_THROWS_AS(adimensionalize(s), InvalidParameter);
    s.energy = 1.0;
    s.mass = -1.0;
    CHECK_THROWS_AS(adimensionalize(s), InvalidParameter);
    s.mass = 1.0;
    s.length = 0.0;
    CHECK_THROWS_AS(adimensionalize(s), InvalidParameter);
  }

  TEST_CASE("validate") {
    CHECK_NOTHROW(AdimensionalBarrier::from_vc(0.3, 1.0, 2.0).validate());
    CHECK_THROWS_AS((AdimensionalBarrier{0.5, 0.5, 0.0, 1.0}.validate()), InvalidParameter);
    CHECK_THROWS_AS((AdimensionalBarrier{0.0, -1.0, 0.0, 1.0}.validate()), InvalidParameter);
    CHECK_THROWS_AS((AdimensionalBarrier{1.0, 0.0, 0.0, -1.0}.validate()), InvalidParameter);
  }

  TEST_CASE("wave_params: complex limit") {
    const auto p = wave_params(std::sqrt(2.0), {1.0, 0.0, 0.0, 1.0});
    CHECK(std::abs(p.alpha_minus - I) < 1e-15);
    CHECK(std::abs(p.alpha_plus - std::sqrt(3.0)) < 1e-15);
    CHECK(p.beta == cplx(0.0));
    CHECK(p.gamma == cplx(0.0));
    // Tunnelling side: both exponents real.
    const auto t = wave_params(0.5, {1.0, 0.0, 0.0, 1.0});
    CHECK(t.alpha_minus.real() > 0.0);
    CHECK(t.alpha_minus.imag() == 0.0);
    CHECK(t.alpha_plus.real() > 0.0);
    CHECK(t.alpha_plus.imag() == 0.0);
  }

  TEST_CASE("wave_params: beta gamma is theta independent") {
    const double eps = std::sqrt(2.0);
    const auto a = wave_params(eps, {0.0, 1.0, 0.0, 1.0});
    const auto b = wave_params(eps, {0.0, 1.0, 2.1, 1.0});
    const double expected = 1.0 / std::pow(2.0 + std::sqrt(3.0), 2);
    CHECK(std::abs(a.beta * a.gamma - expected) < 1e-15);
    CHECK(std::abs(b.beta * b.gamma - expected) < 1e-15);
    CHECK(std::abs(beta_gamma_product(eps, {0.0, 1.0, 0.7, 1.0}) - expected) < 1e-15);
    CHECK(std::abs(a.alpha_minus - b.alpha_minus) < 1e-15);
    CHECK(std::abs(a.alpha_plus - b.alpha_plus) < 1e-15);
    // beta and gamma pick up opposite phases.
    CHECK(std::abs(b.beta - a.beta * std::exp(I * 2.1)) < 1e-15);
    CHECK(std::abs(b.gamma - a.gamma * std::exp(-I * 2.1)) < 1e-15);
  }

  TEST_CASE("wave_params: gamma = conj(beta) above the band") {
    const auto p = wave_params(1.2, {0.5, std::sqrt(3.0) / 2, 0.9, 1.0});
    CHECK(std::abs(p.gamma - std::conj(p.beta)) < 1e-15);
  }

  TEST_CASE("wave_params: algebraic identities") {
    UniformRng rng(3);
    for (const auto& [eps, b] : random_grid(300, 5)) {
      const auto p = wave_params(eps, b);
      const cplx am2 = p.alpha_minus * p.alpha_minus;
      const cplx ap2 = p.alpha_plus * p.alpha_plus;
      CHECK(std::abs(am2 + ap2 - 2.0 * b.vc) < 1e-12);
      const double e4 = std::pow(eps, 4);
      CHECK(std::abs(am2 * ap2 - (b.vc * b.vc - e4 + b.vq * b.vq)) < 1e-11 * std::max(1.0, e4));
      CHECK(p.alpha_minus.real() >= 0.0);
      CHECK(p.alpha_plus.real() >= 0.0);
    }
    (void)rng;
  }

  TEST_CASE("wave_params: degenerate band and domain") {
    CHECK_THROWS_AS(wave_params(1.0, {0.0, 1.0, 0.0, 1.0}), DegenerateParameters);
    const double e = std::pow(0.5, 0.5);  // eps^2 = Vq = 0.5
    CHECK_THROWS_AS(wave_params(e, {std::sqrt(0.75), 0.5, 0.0, 1.0}), DegenerateParameters);
    CHECK_THROWS_AS(wave_params(0.0, {1.0, 0.0, 0.0, 1.0}), InvalidParameter);
    CHECK_THROWS_AS(wave_params(-1.0, {1.0, 0.0, 0.0, 1.0}), InvalidParameter);
  }
}

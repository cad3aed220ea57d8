#include <doctest.h>

#include <cmath>

#include "qbarrier/sampling.hpp"
#include "qbarrier/transfer_matrix.hpp"

using namespace qbarrier;

namespace {
const cplx I(0.0, 1.0);

double max_diff(const TransferMatrix& a, const TransferMatrix& b) { return (a - b).max_abs(); }
}  // namespace

TEST_SUITE("transfer_matrix") {
  TEST_CASE("complex limit: block structure and cosh element") {
    for (double eps : {0.4, 0.9, 1.3, 2.2}) {
      const double lambda = 1.7;
      const auto m = transfer_closed(wave_params(eps, {1.0, 0.0, 0.0, lambda}), lambda);
      for (auto [r, c] : {std::pair{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 0}, {3, 1}}) {
        CHECK(std::abs(m(r, c)) == 0.0);
      }
      CHECK(std::abs(m(0, 0) - std::cosh(std::sqrt(cplx(1.0 - eps * eps)) * lambda)) < 1e-13);
    }
  }

  TEST_CASE("complex limit: G is block diagonal") {
    const auto f = build_factors(wave_params(1.3, {1.0, 0.0, 0.0, 1.0}), 1.0);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 2; c < 4; ++c) {
        CHECK(f.g(r, c) == cplx(0.0));
        CHECK(f.g(c, r) == cplx(0.0));
      }
    }
    CHECK(f.g(0, 0) == cplx(1.0));
    CHECK(f.g(1, 1) == cplx(-1.0));
  }

  TEST_CASE("lambda = 0 gives the identity") {
    const auto p = wave_params(1.3, {0.3, std::sqrt(0.91), 0.4, 0.0});
    const auto f = build_factors(p, 0.0);
    CHECK((f.delta - TransferMatrix::identity()).max_abs() == 0.0);
    CHECK(max_diff(transfer_closed(p, 0.0), TransferMatrix::identity()) < 1e-15);
    CHECK(max_diff(transfer_numeric(p, 0.0), TransferMatrix::identity()) < 1e-15);
  }

  TEST_CASE("G inverse residual") {
    const auto f = build_factors(wave_params(1.2, {0.0, 1.0, 0.0, 1.0}), 1.0);
    CHECK((f.g * inverse(f.g) - TransferMatrix::identity()).max_abs() < 1e-12);
    CHECK_FALSE(f.ill_conditioned);
    CHECK(f.condition > 0.0);
    CHECK(f.condition < kConditionWarning);
  }

  TEST_CASE("closed table equals G Delta G^-1") {
    const AdimensionalBarrier b{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.7, 2.0};
    const auto p = wave_params(1.3, b);
    CHECK(max_diff(transfer_closed(p, 2.0), transfer_numeric(p, 2.0)) < 1e-10);
  }

  TEST_CASE("closed table equals G Delta G^-1 on a random grid") {
    for (const auto& [eps, b] : random_grid(200, 101)) {
      const double tol = 1e-10;
      CHECK(transfer_discrepancy_binary128(eps, b) < tol);
      // In binary64 the agreement is relative to the size of M.
      const auto p = wave_params(eps, b);
      const auto mc = transfer_closed(p, b.lambda);
      CHECK(max_diff(mc, transfer_numeric(p, b.lambda)) < 1e-12 * std::max(1.0, mc.max_abs()));
    }
  }

  TEST_CASE("determinant is one") {
    for (const auto& [eps, b] : random_grid(100, 103, {.lambda_hi = 3.0})) {
      const auto m = transfer_closed(wave_params(eps, b), b.lambda);
      CHECK(std::abs(determinant(m) - 1.0) < 1e-10 * std::max(1.0, std::pow(m.max_abs(), 2)));
    }
  }

  TEST_CASE("composition M(l1 + l2) = M(l1) M(l2)") {
    for (const auto& [eps, b] : random_grid(100, 107, {.lambda_hi = 4.0})) {
      const auto p = wave_params(eps, b);
      const double l1 = 0.37 * b.lambda;
      const double l2 = b.lambda - l1;
      const auto whole = transfer_closed(p, b.lambda);
      const auto parts = transfer_closed(p, l1) * transfer_closed(p, l2);
      CHECK(max_diff(whole, parts) < 1e-10 * std::max(1.0, whole.max_abs()));
    }
  }

  TEST_CASE("theta enters through beta and gamma only") {
    const double eps = 1.1;
    const double delta = 1.3;
    const AdimensionalBarrier b0{0.6, 0.8, 0.2, 2.5};
    AdimensionalBarrier b1 = b0;
    b1.theta += delta;
    const auto m0 = transfer_closed(wave_params(eps, b0), b0.lambda);
    const auto m1 = transfer_closed(wave_params(eps, b1), b1.lambda);
    const cplx up = std::exp(I * delta);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        const bool same_block = (r < 2) == (c < 2);
        const cplx factor = same_block ? cplx(1.0) : (r < 2 ? up : std::conj(up));
        CHECK(std::abs(m1(r, c) - factor * m0(r, c)) < 1e-12);
      }
    }
  }

  TEST_CASE("ill-conditioned G is rejected") {
    BasicWaveParams<cplx> p;
    p.eps = 1.0;
    p.alpha_minus = 1.0;
    p.alpha_plus = 2.0;
    p.beta = 1.0;
    p.gamma = 1.0;
    CHECK_THROWS_AS(build_factors(p, 1.0), IllConditioned);
    CHECK_THROWS_AS(transfer_closed(p, 1.0), IllConditioned);
    p.beta = 0.5;
    p.alpha_minus = 0.0;
    CHECK_THROWS_AS(transfer_closed(p, 1.0), ZeroAlphaMinus);
  }
}

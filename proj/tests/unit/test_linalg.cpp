#include <doctest.h>

#include "qbarrier/linalg.hpp"
#include "support.hpp"

using namespace qbarrier;

TEST_SUITE("linalg") {
  TEST_CASE("inverse and solve on random matrices") {
    UniformRng rng(29);
    for (int n = 0; n < 100; ++n) {
      CMatrix<4> a;
      for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) a(r, c) = testing::random_complex(rng);
      }
      const auto inv = inverse(a);
      CHECK((a * inv - CMatrix<4>::identity()).max_abs() < 1e-10 * condition_estimate(a));
      std::array<cplx, 4> b{};
      for (auto& x : b) x = testing::random_complex(rng);
      const auto x = solve(a, b);
      const auto ax = a * x;
      for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(ax[k] - b[k]) < 1e-10 * condition_estimate(a));
    }
  }

  TEST_CASE("determinant") {
    CMatrix<4> a = CMatrix<4>::diagonal({2.0, cplx(0.0, 1.0), 3.0, 0.5});
    CHECK(std::abs(determinant(a) - cplx(0.0, 3.0)) < 1e-15);
    // A row swap flips the sign.
    CMatrix<4> p;
    p(0, 1) = p(1, 0) = p(2, 2) = p(3, 3) = 1.0;
    CHECK(std::abs(determinant(p) + 1.0) < 1e-15);
  }

  TEST_CASE("singular matrices are rejected") {
    CMatrix<4> a;
    a(0, 0) = 1.0;
    CHECK_THROWS_AS(inverse(a), SingularSystem);
    CHECK_THROWS_AS(solve_dense(std::vector<cplx>(9, cplx(1.0)), std::vector<cplx>(3, cplx(1.0))),
                    SingularSystem);
  }

  TEST_CASE("dense solve") {
    UniformRng rng(31);
    const std::size_t n = 12;
    std::vector<cplx> a(n * n), b(n);
    for (auto& x : a) x = testing::random_complex(rng);
    for (auto& x : b) x = testing::random_complex(rng);
    const auto x = solve_dense(a, b);
    for (std::size_t r = 0; r < n; ++r) {
      cplx s = 0.0;
      for (std::size_t c = 0; c < n; ++c) s += a[r * n + c] * x[c];
      CHECK(std::abs(s - b[r]) < 1e-10);
    }
  }

  TEST_CASE("binary128 inverse") {
    SquareMatrix<Complex128, 4> a;
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) a(r, c) = Complex128(1.0 / (1.0 + r + c), r == c ? 1.0 : 0.0);
    }
    const auto id = a * inverse(a);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        CHECK(abs(id(r, c) - Complex128(r == c ? 1.0 : 0.0)) < 1e-30);
      }
    }
  }
}

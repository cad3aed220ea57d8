#pragma once

// Small dense complex linear algebra: fixed-size square matrices and LU with
// partial pivoting, generic over the complex scalar (std::complex<double> or
// Complex128).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qbarrier/errors.hpp"
#include "qbarrier/float128.hpp"

namespace qbarrier {

namespace detail {

inline double magnitude(const std::complex<double>& z) { return std::abs(z); }
inline double magnitude(const Complex128& z) { return abs(z); }

/// In-place LU factorisation of the row-major n x n matrix `a` with row
/// pivoting.  On return `a` holds L (unit diagonal, below) and U; `perm[i]` is
/// the original row now at position i.
template <class C>
void lu_factor(std::span<C> a, std::size_t n, std::span<std::size_t> perm) {
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = magnitude(a[k * n + k]);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double m = magnitude(a[r * n + k]);
      if (m > best) {
        best = m;
        piv = r;
      }
    }
    if (!(best > 0.0) || !std::isfinite(best)) {
      throw SingularSystem("LU factorisation: zero or non-finite pivot");
    }
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
      std::swap(perm[k], perm[piv]);
    }
    const C inv_pivot = C(1.0) / a[k * n + k];
    for (std::size_t r = k + 1; r < n; ++r) {
      const C f = a[r * n + k] * inv_pivot;
      a[r * n + k] = f;
      if (magnitude(f) == 0.0) continue;
      for (std::size_t c = k + 1; c < n; ++c) a[r * n + c] -= f * a[k * n + c];
    }
  }
}

/// Solves LU x = P b for one right-hand side, overwriting `b` with x.
template <class C>
void lu_solve(std::span<const C> lu, std::size_t n, std::span<const std::size_t> perm,
              std::span<C> b) {
  std::vector<C> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[perm[i]];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < i; ++c) x[i] -= lu[i * n + c] * x[c];
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = i + 1; c < n; ++c) x[i] -= lu[i * n + c] * x[c];
    x[i] /= lu[i * n + i];
  }
  std::copy(x.begin(), x.end(), b.begin());
}

}  // namespace detail

template <class C, std::size_t N>
class SquareMatrix {
 public:
  using value_type = C;
  static constexpr std::size_t size = N;

  SquareMatrix() { data_.fill(C(0.0)); }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = C(1.0);
    return m;
  }

  static SquareMatrix diagonal(const std::array<C, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  C& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const C& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  std::span<C> data() { return data_; }
  std::span<const C> data() const { return data_; }

  /// Largest element modulus.
  double max_abs() const {
    double m = 0.0;
    for (const C& v : data_) m = std::max(m, detail::magnitude(v));
    return m;
  }

  /// Infinity norm (maximum absolute row sum).
  double norm_inf() const {
    double m = 0.0;
    for (std::size_t r = 0; r < N; ++r) {
      double s = 0.0;
      for (std::size_t c = 0; c < N; ++c) s += detail::magnitude((*this)(r, c));
      m = std::max(m, s);
    }
    return m;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t k = 0; k < N; ++k) {
        const C f = a(r, k);
        for (std::size_t c = 0; c < N; ++c) out(r, c) += f * b(k, c);
      }
    }
    return out;
  }

  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N * N; ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

  friend std::array<C, N> operator*(const SquareMatrix& a, const std::array<C, N>& v) {
    std::array<C, N> out;
    out.fill(C(0.0));
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = 0; c < N; ++c) out[r] += a(r, c) * v[c];
    }
    return out;
  }

 private:
  std::array<C, N * N> data_;
};

template <std::size_t N>
using CMatrix = SquareMatrix<std::complex<double>, N>;

/// Inverse by LU with partial pivoting.  Throws SingularSystem.
template <class C, std::size_t N>
SquareMatrix<C, N> inverse(const SquareMatrix<C, N>& m) {
  SquareMatrix<C, N> lu = m;
  std::array<std::size_t, N> perm{};
  detail::lu_factor<C>(lu.data(), N, perm);
  SquareMatrix<C, N> inv;
  std::array<C, N> col;
  for (std::size_t c = 0; c < N; ++c) {
    col.fill(C(0.0));
    col[c] = C(1.0);
    detail::lu_solve<C>(lu.data(), N, perm, col);
    for (std::size_t r = 0; r < N; ++r) inv(r, c) = col[r];
  }
  return inv;
}

/// Solves m x = b.  Throws SingularSystem.
template <class C, std::size_t N>
std::array<C, N> solve(const SquareMatrix<C, N>& m, std::array<C, N> b) {
  SquareMatrix<C, N> lu = m;
  std::array<std::size_t, N> perm{};
  detail::lu_factor<C>(lu.data(), N, perm);
  detail::lu_solve<C>(lu.data(), N, perm, b);
  return b;
}

/// Determinant via LU.
template <class C, std::size_t N>
C determinant(const SquareMatrix<C, N>& m) {
  SquareMatrix<C, N> lu = m;
  std::array<std::size_t, N> perm{};
  detail::lu_factor<C>(lu.data(), N, perm);
  C det(1.0);
  for (std::size_t i = 0; i < N; ++i) det *= lu(i, i);
  // Parity of the permutation.
  std::array<std::size_t, N> p = perm;
  bool odd = false;
  for (std::size_t i = 0; i < N; ++i) {
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      odd = !odd;
    }
  }
  return odd ? -det : det;
}

/// Condition estimate ||m||_inf * ||m^-1||_inf.
template <class C, std::size_t N>
double condition_estimate(const SquareMatrix<C, N>& m) {
  return m.norm_inf() * inverse(m).norm_inf();
}

/// Dense row-major system of runtime size, solved by LU with partial pivoting.
inline std::vector<std::complex<double>> solve_dense(std::vector<std::complex<double>> a,
                                                     std::vector<std::complex<double>> b) {
  const std::size_t n = b.size();
  std::vector<std::size_t> perm(n);
  detail::lu_factor<std::complex<double>>(a, n, perm);
  detail::lu_solve<std::complex<double>>(a, n, perm, b);
  return b;
}

}  // namespace qbarrier

#pragma once

// Complex binary128 scalar. Only the operations the transfer-matrix kernels
// use are provided; everything forwards to GCC's __complex128 and libquadmath.

#include <complex>

#include <quadmath.h>

namespace qbarrier {

class Complex128 {
 public:
  using real_type = __float128;

  Complex128() = default;
  Complex128(double re) { set(re, 0.0); }  // NOLINT(google-explicit-constructor)
  Complex128(double re, double im) { set(re, im); }
  Complex128(std::complex<double> z) { set(z.real(), z.imag()); }  // NOLINT
  explicit Complex128(__complex128 v) : v_(v) {}

  static Complex128 from_parts(real_type re, real_type im) {
    Complex128 c;
    __real__ c.v_ = re;
    __imag__ c.v_ = im;
    return c;
  }

  real_type real_part() const { return __real__ v_; }
  real_type imag_part() const { return __imag__ v_; }
  double real() const { return static_cast<double>(__real__ v_); }
  double imag() const { return static_cast<double>(__imag__ v_); }
  __complex128 raw() const { return v_; }

  std::complex<double> to_double() const { return {real(), imag()}; }

  Complex128& operator+=(const Complex128& o) {
    v_ += o.v_;
    return *this;
  }
  Complex128& operator-=(const Complex128& o) {
    v_ -= o.v_;
    return *this;
  }
  Complex128& operator*=(const Complex128& o) {
    v_ *= o.v_;
    return *this;
  }
  Complex128& operator/=(const Complex128& o) {
    v_ /= o.v_;
    return *this;
  }

  friend Complex128 operator+(Complex128 a, const Complex128& b) { return a += b; }
  friend Complex128 operator-(Complex128 a, const Complex128& b) { return a -= b; }
  friend Complex128 operator*(Complex128 a, const Complex128& b) { return a *= b; }
  friend Complex128 operator/(Complex128 a, const Complex128& b) { return a /= b; }
  friend Complex128 operator-(const Complex128& a) { return Complex128{-a.v_}; }
  friend bool operator==(const Complex128& a, const Complex128& b) { return a.v_ == b.v_; }

 private:
  void set(double re, double im) {
    __real__ v_ = re;
    __imag__ v_ = im;
  }

  __complex128 v_{};
};

inline Complex128 sqrt(const Complex128& z) { return Complex128{csqrtq(z.raw())}; }
inline Complex128 exp(const Complex128& z) { return Complex128{cexpq(z.raw())}; }
inline Complex128 cosh(const Complex128& z) { return Complex128{ccoshq(z.raw())}; }
inline Complex128 sinh(const Complex128& z) { return Complex128{csinhq(z.raw())}; }
inline Complex128 conj(const Complex128& z) { return Complex128{conjq(z.raw())}; }
inline double abs(const Complex128& z) { return static_cast<double>(cabsq(z.raw())); }
inline __float128 abs_q(const Complex128& z) { return cabsq(z.raw()); }

/// Narrowing conversions shared by generic code.
inline std::complex<double> to_double(const Complex128& z) { return z.to_double(); }
inline std::complex<double> to_double(const std::complex<double>& z) { return z; }

}  // namespace qbarrier

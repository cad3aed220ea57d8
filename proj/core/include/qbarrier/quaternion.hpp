#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace qbarrier {

using cplx = std::complex<double>;

/// Quaternion in symplectic form q = z + j w, with z, w in span{1, i}.
///
/// The only rule needed to multiply two such pairs is j z = conj(z) j, which
/// gives
///
///   (z1 + j w1)(z2 + j w2) = (z1 z2 - conj(w1) w2) + j (conj(z1) w2 + w1 z2).
///
/// With k = i j this fixes k = j(-i), i.e. k is stored as (0, -i), and
/// a + b i + c j + d k maps to z = a + b i, w = c - d i.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(cplx z, cplx w = {}) : z_(z), w_(w) {}

  static Quaternion from_components(double a, double b, double c, double d) {
    return {cplx(a, b), cplx(c, -d)};
  }
  static Quaternion unit_i() { return {cplx(0, 1), {}}; }
  static Quaternion unit_j() { return {{}, cplx(1, 0)}; }
  static Quaternion unit_k() { return {{}, cplx(0, -1)}; }

  /// Complex (1, i) part.
  cplx z() const { return z_; }
  /// j-part: the quaternion is z + j w.
  cplx w() const { return w_; }

  /// Real components (a, b, c, d) of a + b i + c j + d k.
  std::array<double, 4> components() const {
    return {z_.real(), z_.imag(), w_.real(), -w_.imag()};
  }

  Quaternion& operator+=(const Quaternion& o) {
    z_ += o.z_;
    w_ += o.w_;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    z_ -= o.z_;
    w_ -= o.w_;
    return *this;
  }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) { return {-a.z_, -a.w_}; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.z_ * b.z_ - std::conj(a.w_) * b.w_, std::conj(a.z_) * b.w_ + a.w_ * b.z_};
  }

  /// Right multiplication by a complex scalar: (z + j w) c = z c + j (w c).
  friend Quaternion operator*(const Quaternion& a, cplx c) { return {a.z_ * c, a.w_ * c}; }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;

 private:
  cplx z_{};
  cplx w_{};
};

inline Quaternion conj(const Quaternion& q) { return {std::conj(q.z()), -q.w()}; }

inline double norm_squared(const Quaternion& q) { return std::norm(q.z()) + std::norm(q.w()); }

inline double norm(const Quaternion& q) { return std::hypot(std::abs(q.z()), std::abs(q.w())); }

}  // namespace qbarrier

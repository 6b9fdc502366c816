#pragma once

#include <cmath>
#include <iosfwd>

#include "qframes/tolerances.hpp"

namespace qframes {

/// An element x0 + x1 i + x2 j + x3 k of the real division algebra of
/// quaternions. Multiplication is the Hamilton product and is not commutative.
///
/// The public constructor rejects non-finite components. Arithmetic results
/// are not re-checked; a finite computation can only leave the finite range by
/// overflow.
class Quaternion {
public:
  constexpr Quaternion() noexcept = default;

  /// Throws Error(InvalidInput) if any component is NaN or infinite.
  explicit Quaternion(double x0, double x1 = 0.0, double x2 = 0.0, double x3 = 0.0);

  static constexpr Quaternion unchecked(double x0, double x1, double x2, double x3) noexcept {
    Quaternion q;
    q.x0_ = x0;
    q.x1_ = x1;
    q.x2_ = x2;
    q.x3_ = x3;
    return q;
  }

  constexpr double x0() const noexcept { return x0_; }
  constexpr double x1() const noexcept { return x1_; }
  constexpr double x2() const noexcept { return x2_; }
  constexpr double x3() const noexcept { return x3_; }

  constexpr double real() const noexcept { return x0_; }
  constexpr Quaternion imag() const noexcept { return unchecked(0.0, x1_, x2_, x3_); }

  constexpr bool is_zero() const noexcept {
    return x0_ == 0.0 && x1_ == 0.0 && x2_ == 0.0 && x3_ == 0.0;
  }

  constexpr Quaternion& operator+=(const Quaternion& o) noexcept {
    x0_ += o.x0_;
    x1_ += o.x1_;
    x2_ += o.x2_;
    x3_ += o.x3_;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) noexcept {
    x0_ -= o.x0_;
    x1_ -= o.x1_;
    x2_ -= o.x2_;
    x3_ -= o.x3_;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) noexcept {
    x0_ *= s;
    x1_ *= s;
    x2_ *= s;
    x3_ *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;

private:
  double x0_ = 0.0;
  double x1_ = 0.0;
  double x2_ = 0.0;
  double x3_ = 0.0;
};

inline constexpr Quaternion kZero = Quaternion::unchecked(0, 0, 0, 0);
inline constexpr Quaternion kOne = Quaternion::unchecked(1, 0, 0, 0);
inline constexpr Quaternion kI = Quaternion::unchecked(0, 1, 0, 0);
inline constexpr Quaternion kJ = Quaternion::unchecked(0, 0, 1, 0);
inline constexpr Quaternion kK = Quaternion::unchecked(0, 0, 0, 1);

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) noexcept { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) noexcept { return p -= q; }
constexpr Quaternion operator-(const Quaternion& q) noexcept {
  return Quaternion::unchecked(-q.x0(), -q.x1(), -q.x2(), -q.x3());
}
constexpr Quaternion operator*(Quaternion q, double s) noexcept { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) noexcept { return q *= s; }
constexpr Quaternion operator/(Quaternion q, double s) noexcept { return q *= (1.0 / s); }

// Hamilton product: i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) noexcept {
  return Quaternion::unchecked(
      p.x0() * q.x0() - p.x1() * q.x1() - p.x2() * q.x2() - p.x3() * q.x3(),
      p.x0() * q.x1() + p.x1() * q.x0() + p.x2() * q.x3() - p.x3() * q.x2(),
      p.x0() * q.x2() - p.x1() * q.x3() + p.x2() * q.x0() + p.x3() * q.x1(),
      p.x0() * q.x3() + p.x1() * q.x2() - p.x2() * q.x1() + p.x3() * q.x0());
}

constexpr Quaternion conj(const Quaternion& q) noexcept {
  return Quaternion::unchecked(q.x0(), -q.x1(), -q.x2(), -q.x3());
}

/// |q|^2 = x0^2 + x1^2 + x2^2 + x3^2.
constexpr double modulus_squared(const Quaternion& q) noexcept {
  return q.x0() * q.x0() + q.x1() * q.x1() + q.x2() * q.x2() + q.x3() * q.x3();
}

inline double modulus(const Quaternion& q) noexcept {
  return std::hypot(std::hypot(q.x0(), q.x1()), std::hypot(q.x2(), q.x3()));
}

/// conj(q) / |q|^2. Throws Error(ZeroDivisor) for q = 0.
Quaternion inverse(const Quaternion& q);

/// Componentwise absolute comparison.
bool approx_equal(const Quaternion& p, const Quaternion& q, double tol = kDefaultEqTolerance) noexcept;

/// Largest componentwise absolute difference.
double max_abs_diff(const Quaternion& p, const Quaternion& q) noexcept;

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qframes

#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "qframes/quaternion.hpp"

namespace qframes {

/// An element of H^n viewed as a right H-module: scalars multiply on the right.
class QVector {
public:
  /// Zero vector of length n; n must be at least 1.
  explicit QVector(std::size_t n);
  explicit QVector(std::vector<Quaternion> entries);
  QVector(std::initializer_list<Quaternion> entries);

  /// The i-th standard basis vector e_i (zero-based) of H^n.
  static QVector basis(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return entries_.size(); }

  const Quaternion& operator[](std::size_t i) const noexcept { return entries_[i]; }
  Quaternion& operator[](std::size_t i) noexcept { return entries_[i]; }

  std::span<const Quaternion> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);

  friend bool operator==(const QVector&, const QVector&) = default;

private:
  std::vector<Quaternion> entries_;
};

QVector operator+(QVector a, const QVector& b);
QVector operator-(QVector a, const QVector& b);
QVector operator-(const QVector& v);

/// Right scalar action v q, (v q)_i = v_i q.
QVector operator*(const QVector& v, const Quaternion& q);
QVector operator*(const QVector& v, double s);

/// <p|q> = sum_i conj(p_i) q_i. Conjugate-linear in the first slot, right
/// linear in the second: <p|q a> = <p|q> a.
Quaternion inner(const QVector& p, const QVector& q);

/// sqrt(Re <v|v>).
double norm(const QVector& v) noexcept;
double norm_squared(const QVector& v) noexcept;

double max_abs_diff(const QVector& a, const QVector& b);
bool approx_equal(const QVector& a, const QVector& b, double tol = kDefaultEqTolerance);

/// sum_i x_i q_i, the right linear combination of a family.
QVector combine(std::span<const QVector> family, std::span<const Quaternion> coefficients);

/// The standard basis e_0, ..., e_{n-1} of H^n.
std::vector<QVector> standard_basis(std::size_t n);

/// Largest |<z_i|z_j> - delta_ij| over a family.
double orthonormality_defect(std::span<const QVector> family);

std::ostream& operator<<(std::ostream& os, const QVector& v);

}  // namespace qframes

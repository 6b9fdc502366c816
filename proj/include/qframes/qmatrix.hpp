#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "qframes/quaternion.hpp"
#include "qframes/qvector.hpp"

namespace qframes {

/// A rows x cols array of quaternions acting on H^cols by left matrix action,
/// (A v)_i = sum_j A_ij v_j. Scalars act on the right of vectors, so the action
/// is right H-linear: A (v q) = (A v) q.
class QMatrix {
public:
  QMatrix(std::size_t rows, std::size_t cols);
  /// Row-major nested initializer, for tests and small literals.
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(std::span<const Quaternion> entries);
  /// The matrix whose j-th column is columns[j]. The family must be non-empty
  /// and of uniform length.
  static QMatrix from_columns(std::span<const QVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Quaternion& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  Quaternion& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  QVector column(std::size_t c) const;
  std::vector<QVector> columns() const;

  /// Largest entry modulus; 0 for the zero matrix.
  double max_modulus() const noexcept;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Quaternion> data_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& v);
QMatrix operator*(const QMatrix& a, double s);

/// Conjugate transpose, (A*)_ij = conj(A_ji); satisfies <v|A u> = <A* v|u>.
QMatrix adjoint(const QMatrix& a);

bool is_hermitian(const QMatrix& a, double tol = kDefaultEqTolerance);

double max_abs_diff(const QMatrix& a, const QMatrix& b);
bool approx_equal(const QMatrix& a, const QMatrix& b, double tol = kDefaultEqTolerance);

std::ostream& operator<<(std::ostream& os, const QMatrix& a);

/// Dense real matrix, row-major. Only what the real embedding and the
/// eigensolver need.
class RealMatrix {
public:
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealMatrix transpose(const RealMatrix& a);
double max_abs_diff(const RealMatrix& a, const RealMatrix& b);

/// Replaces each entry a + bi + cj + dk by the 4x4 block of left
/// multiplication
///
///   [ a -b -c -d ]
///   [ b  a -d  c ]
///   [ c  d  a -b ]
///   [ d -c  b  a ]
///
/// The map is an injective real-algebra homomorphism with
/// embed(A B) = embed(A) embed(B) and embed(A*) = embed(A)^T.
RealMatrix embed_real(const QMatrix& a);

/// Stacks the four components of each entry; embed_real(A) applied to
/// stack_components(v) equals stack_components(A v).
std::vector<double> stack_components(const QVector& v);
/// Inverse of stack_components; the length must be a positive multiple of 4.
QVector unstack_components(std::span<const double> components);

}  // namespace qframes

#include "qframes/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "qframes/error.hpp"

namespace qframes {

namespace {

std::string shape(const QMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": " + shape(a) + " vs " + shape(b));
  }
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorKind::InvalidInput, "matrix dimensions must be positive");
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : QMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
    ++r;
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Quaternion> entries) {
  QMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

QMatrix QMatrix::from_columns(std::span<const QVector> columns) {
  if (columns.empty()) throw Error(ErrorKind::EmptyFamily, "matrix from an empty family");
  const std::size_t n = columns.front().size();
  QMatrix m(n, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "column " + std::to_string(c) + " has length " +
                                                    std::to_string(columns[c].size()) +
                                                    ", expected " + std::to_string(n));
    }
    for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<QVector> QMatrix::columns() const {
  std::vector<QVector> cs;
  cs.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) cs.push_back(column(c));
  return cs;
}

double QMatrix::max_modulus() const noexcept {
  double m = 0.0;
  for (const auto& q : data_) m = std::max(m, modulus(q));
  return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require_same_shape(*this, o, "matrix addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require_same_shape(*this, o, "matrix subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product: " + shape(a) + " times " + shape(b));
  }
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Quaternion& aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols() != v.size()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector product: " + shape(a) +
                                                  " times length " + std::to_string(v.size()));
  }
  QVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  }
  return r;
}

QMatrix operator*(const QMatrix& a, double s) {
  QMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= s;
  }
  return r;
}

QMatrix adjoint(const QMatrix& a) {
  QMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = conj(a(i, j));
  }
  return t;
}

bool is_hermitian(const QMatrix& a, double tol) {
  return a.is_square() && max_abs_diff(a, adjoint(a)) <= tol;
}

double max_abs_diff(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "comparison");
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, max_abs_diff(a(i, j), b(i, j)));
  }
  return d;
}

bool approx_equal(const QMatrix& a, const QMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
    os << ']';
  }
  return os << ']';
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "real matrix product");
  RealMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

RealMatrix transpose(const RealMatrix& a) {
  RealMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "real matrix comparison");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  }
  return d;
}

RealMatrix embed_real(const QMatrix& a) {
  RealMatrix e(4 * a.rows(), 4 * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Quaternion& q = a(i, j);
      const double w = q.x0(), x = q.x1(), y = q.x2(), z = q.x3();
      const double block[4][4] = {{w, -x, -y, -z}, {x, w, -z, y}, {y, z, w, -x}, {z, -y, x, w}};
      for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) e(4 * i + r, 4 * j + c) = block[r][c];
      }
    }
  }
  return e;
}

std::vector<double> stack_components(const QVector& v) {
  std::vector<double> out;
  out.reserve(4 * v.size());
  for (const auto& q : v) {
    out.push_back(q.x0());
    out.push_back(q.x1());
    out.push_back(q.x2());
    out.push_back(q.x3());
  }
  return out;
}

QVector unstack_components(std::span<const double> components) {
  if (components.empty() || components.size() % 4 != 0) {
    throw Error(ErrorKind::DimensionMismatch, "component count is not a positive multiple of 4");
  }
  QVector v(components.size() / 4);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = Quaternion(components[4 * i], components[4 * i + 1], components[4 * i + 2],
                      components[4 * i + 3]);
  }
  return v;
}

}  // namespace qframes

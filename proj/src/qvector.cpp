#include "qframes/qvector.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "qframes/error.hpp"

namespace qframes {

namespace {

void require_same_length(const QVector& a, const QVector& b, const char* what) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": lengths " +
                                                  std::to_string(a.size()) + " and " +
                                                  std::to_string(b.size()));
  }
}

}  // namespace

QVector::QVector(std::size_t n) : entries_(n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "vector length must be at least 1");
}

QVector::QVector(std::vector<Quaternion> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::InvalidInput, "vector length must be at least 1");
}

QVector::QVector(std::initializer_list<Quaternion> entries)
    : QVector(std::vector<Quaternion>(entries)) {}

QVector QVector::basis(std::size_t n, std::size_t i) {
  if (i >= n) throw Error(ErrorKind::InvalidInput, "basis index out of range");
  QVector e(n);
  e[i] = kOne;
  return e;
}

QVector& QVector::operator+=(const QVector& o) {
  require_same_length(*this, o, "vector addition");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  require_same_length(*this, o, "vector subtraction");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

QVector operator+(QVector a, const QVector& b) { return a += b; }
QVector operator-(QVector a, const QVector& b) { return a -= b; }

QVector operator-(const QVector& v) {
  QVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

QVector operator*(const QVector& v, const Quaternion& q) {
  QVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * q;
  return r;
}

QVector operator*(const QVector& v, double s) {
  QVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
  return r;
}

Quaternion inner(const QVector& p, const QVector& q) {
  require_same_length(p, q, "inner product");
  Quaternion acc;
  for (std::size_t i = 0; i < p.size(); ++i) acc += conj(p[i]) * q[i];
  return acc;
}

double norm_squared(const QVector& v) noexcept {
  double s = 0.0;
  for (const auto& x : v) s += modulus_squared(x);
  return s;
}

double norm(const QVector& v) noexcept { return std::sqrt(norm_squared(v)); }

double max_abs_diff(const QVector& a, const QVector& b) {
  require_same_length(a, b, "comparison");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, max_abs_diff(a[i], b[i]));
  return d;
}

bool approx_equal(const QVector& a, const QVector& b, double tol) {
  return a.size() == b.size() && max_abs_diff(a, b) <= tol;
}

QVector combine(std::span<const QVector> family, std::span<const Quaternion> coefficients) {
  if (family.empty()) throw Error(ErrorKind::EmptyFamily, "linear combination of an empty family");
  if (family.size() != coefficients.size()) {
    throw Error(ErrorKind::DimensionMismatch, "family has " + std::to_string(family.size()) +
                                                  " vectors but " +
                                                  std::to_string(coefficients.size()) +
                                                  " coefficients were given");
  }
  QVector sum(family.front().size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    require_same_length(sum, family[i], "linear combination");
    for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += family[i][r] * coefficients[i];
  }
  return sum;
}

std::vector<QVector> standard_basis(std::size_t n) {
  std::vector<QVector> basis;
  basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) basis.push_back(QVector::basis(n, i));
  return basis;
}

double orthonormality_defect(std::span<const QVector> family) {
  double defect = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      const Quaternion delta = i == j ? kOne : kZero;
      defect = std::max(defect, max_abs_diff(inner(family[i], family[j]), delta));
    }
  }
  return defect;
}

std::ostream& operator<<(std::ostream& os, const QVector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ']';
}

}  // namespace qframes

#pragma once

// Random inputs for property tests. Deliberately independent of qframes::gen
// so the generator module is not also the source of its own test inputs.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qframes/qmatrix.hpp"
#include "qframes/quaternion.hpp"
#include "qframes/qvector.hpp"

namespace qtest {

using namespace qframes;

class Random {
public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  double real(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }

  Quaternion quaternion() { return Quaternion(real(), real(), real(), real()); }
  Quaternion nonzero_quaternion() {
    for (;;) {
      Quaternion q = quaternion();
      if (modulus(q) > 0.1) return q;
    }
  }
  QVector vector(std::size_t n) {
    QVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = quaternion();
    return v;
  }
  QMatrix matrix(std::size_t rows, std::size_t cols) {
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = quaternion();
    }
    return m;
  }
  std::vector<QVector> family(std::size_t n, std::size_t m) {
    std::vector<QVector> f;
    for (std::size_t i = 0; i < m; ++i) f.push_back(vector(n));
    return f;
  }
  /// Diagonally dominated matrix, comfortably invertible.
  QMatrix invertible(std::size_t n) {
    QMatrix m = matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += Quaternion(2.0 * static_cast<double>(n));
    return m;
  }
  QMatrix hermitian(std::size_t n) {
    QMatrix a = matrix(n, n);
    return a + adjoint(a);
  }

private:
  std::mt19937_64 engine_;
};

/// Hamilton product through the Cayley-Dickson pair q = a + b j with a, b
/// complex: (a + b j)(c + d j) = (a c - b conj(d)) + (a d + b conj(c)) j.
inline Quaternion cayley_dickson_product(const Quaternion& p, const Quaternion& q) {
  using C = std::complex<double>;
  const C a(p.x0(), p.x1()), b(p.x2(), p.x3());
  const C c(q.x0(), q.x1()), d(q.x2(), q.x3());
  const C first = a * c - b * std::conj(d);
  const C second = a * d + b * std::conj(c);
  return Quaternion(first.real(), first.imag(), second.real(), second.imag());
}

inline QVector vec(std::initializer_list<Quaternion> xs) { return QVector(xs); }
inline Quaternion re(double x) { return Quaternion(x); }
inline QMatrix diag(std::initializer_list<Quaternion> xs) {
  const std::vector<Quaternion> d(xs);
  return QMatrix::diagonal(d);
}

}  // namespace qtest

#include "qframes/elimination.hpp"

#include <algorithm>
#include <string>

#include "qframes/error.hpp"

namespace qframes {

namespace {

struct Echelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each leading row
};

std::size_t find_pivot(const QMatrix& m, std::size_t col, std::size_t first_row) {
  std::size_t best = first_row;
  double best_mod = -1.0;
  for (std::size_t r = first_row; r < m.rows(); ++r) {
    const double mod = modulus(m(r, col));
    if (mod > best_mod) {  // strict: ties keep the lowest row
      best = r;
      best_mod = mod;
    }
  }
  return best;
}

void swap_rows(QMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// Reduced row echelon form: every pivot is 1 and is the only non-zero entry of
// its column.
Echelon reduce(QMatrix m, double threshold) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    const std::size_t p = find_pivot(m, col, row);
    if (modulus(m(p, col)) <= threshold) continue;
    swap_rows(m, p, row);

    const Quaternion scale = inverse(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = scale * m(row, c);
    m(row, col) = kOne;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Quaternion factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
      m(r, col) = kZero;
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

void require_square(const QMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " needs a square matrix, got " +
                                                  std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()));
  }
}

}  // namespace

QVector solve(const QMatrix& a, const QVector& b, const Tolerances& tol) {
  require_square(a, "solve");
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: right-hand side length");
  const std::size_t n = a.rows();
  const double threshold = tol.rank_threshold(a.max_modulus());

  QMatrix m = a;
  QVector rhs = b;
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = find_pivot(m, col, col);
    if (modulus(m(p, col)) <= threshold) {
      throw Error(ErrorKind::Singular, "no pivot in column " + std::to_string(col));
    }
    swap_rows(m, p, col);
    std::swap(rhs[p], rhs[col]);

    const Quaternion pivot_inv = inverse(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Quaternion factor = m(r, col) * pivot_inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
      rhs[r] -= factor * rhs[col];
    }
  }

  QVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Quaternion acc = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m(i, j) * x[j];
    x[i] = inverse(m(i, i)) * acc;
  }
  return x;
}

QMatrix invert(const QMatrix& a, const Tolerances& tol) {
  require_square(a, "invert");
  const std::size_t n = a.rows();
  const double threshold = tol.rank_threshold(a.max_modulus());

  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = kOne;
  }

  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = find_pivot(aug, col, col);
    if (modulus(aug(p, col)) <= threshold) {
      throw Error(ErrorKind::Singular, "no pivot in column " + std::to_string(col));
    }
    swap_rows(aug, p, col);

    const Quaternion scale = inverse(aug(col, col));
    for (std::size_t c = 0; c < 2 * n; ++c) aug(col, c) = scale * aug(col, c);
    aug(col, col) = kOne;

    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug(r, col).is_zero()) continue;
      const Quaternion factor = aug(r, col);
      for (std::size_t c = 0; c < 2 * n; ++c) aug(r, c) -= factor * aug(col, c);
      aug(r, col) = kZero;
    }
  }

  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

std::vector<std::size_t> pivot_columns(const QMatrix& a, const Tolerances& tol) {
  return reduce(a, tol.rank_threshold(a.max_modulus())).pivots;
}

std::size_t rank(const QMatrix& a, const Tolerances& tol) { return pivot_columns(a, tol).size(); }

std::vector<QVector> null_space(const QMatrix& a, const Tolerances& tol) {
  const Echelon e = reduce(a, tol.rank_threshold(a.max_modulus()));
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;

  // Row r of the reduced form reads x_{pivot_r} + sum_f R_{r f} x_f = 0 over
  // the free columns f.
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector x(a.cols());
    x[f] = kOne;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<QVector> orth_complement(std::span<const QVector> family, std::size_t n,
                                     const Tolerances& tol) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "ambient dimension must be positive");
  if (family.empty()) return standard_basis(n);

  // <v|u> = sum_j conj(u_j) v_j, so v is orthogonal to u exactly when the
  // row u* annihilates v.
  QMatrix m(family.size(), n);
  for (std::size_t r = 0; r < family.size(); ++r) {
    if (family[r].size() != n) throw Error(ErrorKind::DimensionMismatch, "orth_complement: vector length");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = conj(family[r][c]);
  }
  const auto kernel = null_space(m, tol);
  if (kernel.empty()) return {};
  return gram_schmidt(kernel, tol);
}

bool is_complete(std::span<const QVector> family, std::size_t n, const Tolerances& tol) {
  if (family.empty()) return false;
  if (family.front().size() != n) throw Error(ErrorKind::DimensionMismatch, "is_complete: vector length");
  return rank(QMatrix::from_columns(family), tol) == n;
}

std::vector<QVector> gram_schmidt(std::span<const QVector> family, const Tolerances& tol) {
  if (family.empty()) return {};
  double largest = 0.0;
  for (const auto& v : family) largest = std::max(largest, norm(v));
  const double threshold = tol.rank_threshold(largest);

  std::vector<QVector> basis;
  basis.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    QVector v = family[i];
    if (v.size() != family.front().size()) {
      throw Error(ErrorKind::DimensionMismatch, "gram_schmidt: vector length");
    }
    // Two passes of modified Gram-Schmidt keep the output orthonormal to
    // working precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& z : basis) v -= z * inner(z, v);
    }
    const double r = norm(v);
    if (r <= threshold) {
      throw Error(ErrorKind::DependentInput, "vector " + std::to_string(i) +
                                                 " lies in the span of its predecessors");
    }
    basis.push_back(v * (1.0 / r));
  }
  return basis;
}

}  // namespace qframes

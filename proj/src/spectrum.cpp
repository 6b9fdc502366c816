#include "qframes/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qframes/error.hpp"

namespace qframes {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalRatio = 1e-12;

void rotate(RealMatrix& a, RealMatrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

bool converged(const RealMatrix& a) {
  double off = 0.0, diag = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i == j) {
        diag += a(i, i) * a(i, i);
      } else {
        off += a(i, j) * a(i, j);
      }
    }
  }
  return std::sqrt(off) <= kOffDiagonalRatio * std::sqrt(diag);
}

void require_hermitian(const QMatrix& a, const Tolerances& tol) {
  if (!a.is_square()) throw Error(ErrorKind::NotHermitian, "matrix is not square");
  const double scale = std::max(1.0, a.max_modulus());
  const double asym = max_abs_diff(a, adjoint(a));
  if (asym > tol.eq * scale) {
    throw Error(ErrorKind::NotHermitian, "|A - A*| = " + std::to_string(asym));
  }
}

double spectral_scale(const std::vector<double>& values) {
  double m = 1.0;
  for (double x : values) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

RealEigen jacobi_eigen(const RealMatrix& symmetric) {
  const std::size_t n = symmetric.rows();
  if (n == 0 || symmetric.cols() != n) throw Error(ErrorKind::DimensionMismatch, "jacobi_eigen needs a square matrix");

  RealMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (symmetric(i, j) + symmetric(j, i));
  }
  RealMatrix v = RealMatrix::identity(n);

  int sweep = 0;
  while (!converged(a)) {
    if (++sweep > kMaxSweeps) {
      throw Error(ErrorKind::ConvergenceFailure, "Jacobi did not converge in " +
                                                     std::to_string(kMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  RealEigen out{std::vector<double>(n), RealMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::size_t Spectrum::total_multiplicity() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0});
}

std::vector<double> embedded_eigenvalues(const QMatrix& a, const Tolerances& tol) {
  require_hermitian(a, tol);
  return jacobi_eigen(embed_real(a)).values;
}

HermitianEigen hermitian_eigen(const QMatrix& a, const Tolerances& tol) {
  require_hermitian(a, tol);
  const RealEigen real = jacobi_eigen(embed_real(a));
  const std::size_t n = a.rows();
  const double cluster_tol = tol.spec * spectral_scale(real.values);

  HermitianEigen out;
  out.values.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    const double lo = real.values[4 * g], hi = real.values[4 * g + 3];
    if (hi - lo > cluster_tol) {
      throw Error(ErrorKind::MultiplicityAnomaly,
                  "eigenvalues " + std::to_string(4 * g) + ".." + std::to_string(4 * g + 3) +
                      " spread by " + std::to_string(hi - lo));
    }
    out.values.push_back(0.25 * (real.values[4 * g] + real.values[4 * g + 1] +
                                 real.values[4 * g + 2] + real.values[4 * g + 3]));
  }

  // Each real eigenvector, read as a quaternion vector, is a right eigenvector.
  // The four real vectors of one cluster span a single quaternion line, so a
  // quaternion-orthonormal set is picked greedily within runs of equal
  // eigenvalues.
  out.vectors.reserve(n);
  std::size_t g = 0;
  while (g < n) {
    std::size_t end = g + 1;
    while (end < n && out.values[end] - out.values[g] <= cluster_tol) ++end;

    std::vector<QVector> candidates;
    for (std::size_t k = 4 * g; k < 4 * end; ++k) {
      std::vector<double> col(4 * n);
      for (std::size_t i = 0; i < 4 * n; ++i) col[i] = real.vectors(i, k);
      candidates.push_back(unstack_components(col));
    }
    for (std::size_t pick = g; pick < end; ++pick) {
      std::size_t best = 0;
      double best_norm = -1.0;
      QVector best_residual(n);
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        QVector r = candidates[c];
        for (int pass = 0; pass < 2; ++pass) {
          for (std::size_t k = g; k < out.vectors.size(); ++k) r -= out.vectors[k] * inner(out.vectors[k], r);
        }
        const double rn = norm(r);
        if (rn > best_norm) {
          best = c;
          best_norm = rn;
          best_residual = std::move(r);
        }
      }
      candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
      out.vectors.push_back(best_residual * (1.0 / best_norm));
    }
    g = end;
  }
  return out;
}

Spectrum hermitian_spectrum(const QMatrix& a, const Tolerances& tol) {
  const HermitianEigen eig = hermitian_eigen(a, tol);
  const double merge_tol = tol.spec * spectral_scale(eig.values);

  Spectrum s;
  std::size_t g = 0;
  while (g < eig.values.size()) {
    std::size_t end = g + 1;
    double sum = eig.values[g];
    while (end < eig.values.size() && eig.values[end] - eig.values[g] <= merge_tol) sum += eig.values[end++];
    s.eigenvalues.push_back(sum / static_cast<double>(end - g));
    s.multiplicities.push_back(end - g);
    g = end;
  }
  return s;
}

double op_norm(const QMatrix& a, const Tolerances& tol) {
  return std::sqrt(std::max(0.0, hermitian_eigen(adjoint(a) * a, tol).values.back()));
}

}  // namespace qframes

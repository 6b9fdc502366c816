#pragma once

#include <cstddef>
#include <vector>

#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"
#include "qframes/tolerances.hpp"

namespace qframes {

struct RealEigen {
  std::vector<double> values;  // ascending
  RealMatrix vectors;          // column k belongs to values[k]
};

/// Cyclic Jacobi for a real symmetric matrix. Sweeps until the off-diagonal
/// Frobenius norm is at most 1e-12 times the diagonal norm; throws
/// Error(ConvergenceFailure) after 100 sweeps.
RealEigen jacobi_eigen(const RealMatrix& symmetric);

/// Distinct eigenvalues of a Hermitian quaternionic matrix with their
/// quaternionic multiplicities.
struct Spectrum {
  std::vector<double> eigenvalues;       // ascending, distinct
  std::vector<std::size_t> multiplicities;

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
  std::size_t total_multiplicity() const;
};

/// Eigenvalues repeated by multiplicity (n of them for an n x n matrix) and a
/// quaternion-orthonormal set of eigenvectors, A v_k = v_k lambda_k.
struct HermitianEigen {
  std::vector<double> values;
  std::vector<QVector> vectors;
};

/// The 4n eigenvalues of embed_real(A), ascending. A must be Hermitian.
std::vector<double> embedded_eigenvalues(const QMatrix& a, const Tolerances& tol = {});

/// Throws Error(NotHermitian) unless A = A* within tol.eq (scaled by the
/// largest entry modulus when that exceeds 1), and Error(MultiplicityAnomaly)
/// if the real spectrum does not split into clusters of four within tol.spec.
HermitianEigen hermitian_eigen(const QMatrix& a, const Tolerances& tol = {});
Spectrum hermitian_spectrum(const QMatrix& a, const Tolerances& tol = {});

/// Operator norm sqrt(lambda_max(A* A)).
double op_norm(const QMatrix& a, const Tolerances& tol = {});

}  // namespace qframes

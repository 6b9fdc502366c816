#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"
#include "qframes/tolerances.hpp"

namespace qframes {

// Gaussian elimination over the quaternions. Row operations multiply rows on
// the left, which preserves the right null space and the right-linear
// dependencies between columns. Pivots are chosen by largest modulus with ties
// going to the lowest row index. A pivot counts as zero when its modulus is at
// most tol.rank times the largest entry modulus of the input.

/// Solves A x = b for square A. Throws Error(Singular) when a pivot column
/// has no admissible pivot.
QVector solve(const QMatrix& a, const QVector& b, const Tolerances& tol = {});

/// A^{-1} by Gauss-Jordan elimination. Throws Error(Singular).
QMatrix invert(const QMatrix& a, const Tolerances& tol = {});

/// Number of pivots, equal to the dimension of the right span of the columns.
std::size_t rank(const QMatrix& a, const Tolerances& tol = {});

/// Indices of the pivot columns in column order: a maximal right-linearly
/// independent subfamily of the columns.
std::vector<std::size_t> pivot_columns(const QMatrix& a, const Tolerances& tol = {});

/// A basis (not orthonormalized) of {x : A x = 0}.
std::vector<QVector> null_space(const QMatrix& a, const Tolerances& tol = {});

/// Orthonormal basis of {v in H^n : <v|u> = 0 for all u in family}. Empty when
/// the family spans H^n.
std::vector<QVector> orth_complement(std::span<const QVector> family, std::size_t n,
                                     const Tolerances& tol = {});

/// rank of the family equals n: the family spans H^n.
bool is_complete(std::span<const QVector> family, std::size_t n, const Tolerances& tol = {});

/// Orthonormalizes a right-linearly independent family. The projection of v
/// on a unit vector z is z <z|v>, coefficient on the right. Throws
/// Error(DependentInput) if a residual norm is at most tol.rank times the
/// largest input norm.
std::vector<QVector> gram_schmidt(std::span<const QVector> family, const Tolerances& tol = {});

}  // namespace qframes

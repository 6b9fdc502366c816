#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"
#include "qframes/tolerances.hpp"

namespace qframes {

/// Two independently computed duals must agree entrywise to this much
/// (relative to the largest entry when that exceeds 1).
inline constexpr double kDualAgreement = 1e-8;

/// Witness that X = U(N) is a Riesz basis of H^n.
struct RieszCertificate {
  QMatrix U;
  std::vector<QVector> N;  // orthonormal basis
  std::vector<QVector> X;  // x_k = U N_k
  std::vector<QVector> Y;  // y_k = (U^{-1})* N_k, the dual Riesz basis
  double lower = 0.0;      // 1 / |U^{-1}|^2
  double upper = 0.0;      // |U|^2
  Tolerances tolerances;
};

/// Optimal constants in A sum|q_k|^2 <= |sum x_k q_k|^2 <= B sum|q_k|^2, which
/// are the extreme eigenvalues of the Gram matrix G_ij = <x_i|x_j>.
struct RieszSequenceBounds {
  double lower = 0.0;
  double upper = 0.0;
  QMatrix gram;
  bool is_riesz_sequence = false;
  /// Unit coefficient vector q with sum x_k q_k ~ 0, when the family is not a
  /// Riesz sequence.
  std::optional<QVector> null_direction;
};

enum class RieszFailure { NotComplete, LowerBoundZero, NotInvertible };

/// NOT_COMPLETE, LOWER_BOUND_ZERO or NOT_INVERTIBLE.
std::string_view failure_tag(RieszFailure f) noexcept;

/// Result of checking both directions of "Riesz basis iff complete Riesz
/// sequence" independently.
struct RieszBasisCheck {
  std::size_t n;
  bool complete;
  RieszSequenceBounds bounds;
  bool gram_direction = false;      // complete and lower Gram bound > 0
  bool operator_direction = false;  // U = [X] square, invertible, make_riesz succeeds
  std::optional<RieszCertificate> certificate;
  std::vector<RieszFailure> failures;  // every failed condition, most telling first

  bool is_riesz_basis() const noexcept { return certificate.has_value(); }
  bool directions_agree() const noexcept { return gram_direction == operator_direction; }
  std::optional<RieszFailure> tag() const {
    return failures.empty() ? std::nullopt : std::optional(failures.front());
  }
};

/// Builds the certificate for X = U(N). N defaults to the standard basis.
/// Throws Error(Singular) if U is not invertible, Error(NotOrthonormal) if N
/// fails the delta check at tol.eq, Error(DimensionMismatch) on shapes.
RieszCertificate make_riesz(const QMatrix& u, const Tolerances& tol = {});
RieszCertificate make_riesz(const QMatrix& u, std::span<const QVector> orthonormal_basis,
                            const Tolerances& tol = {});

/// Gram matrix of a family, G_ij = <x_i|x_j>.
QMatrix gram_matrix(std::span<const QVector> family);

/// Throws Error(EmptyFamily) for an empty family.
RieszSequenceBounds riesz_sequence_bounds(std::span<const QVector> family, const Tolerances& tol = {});

/// Both directions of the Riesz-basis characterization. Never throws for a
/// well-formed family; failure is reported in the result.
RieszBasisCheck is_riesz_basis(std::span<const QVector> family, const Tolerances& tol = {});

struct DualComputation {
  std::vector<QVector> by_operator;  // columns of (U*)^{-1}
  std::vector<QVector> canonical;    // S^{-1} x_k with S the frame operator
  double discrepancy = 0.0;          // largest entrywise difference, scaled
};

/// Computes the dual along both routes without judging the result.
DualComputation dual_paths(std::span<const QVector> family, const Tolerances& tol = {});

/// The unique Y with u = sum_k x_k <y_k|u> for all u. Throws
/// Error(NotRieszBasis) if the family is not a Riesz basis and
/// Error(DualMismatch) if the two routes disagree beyond kDualAgreement.
std::vector<QVector> dual_riesz(std::span<const QVector> family, const Tolerances& tol = {});

struct Reconstruction {
  QVector via_x;  // sum_k x_k <y_k|u>
  QVector via_y;  // sum_k y_k <x_k|u>
  double residual_x = 0.0;
  double residual_y = 0.0;
};

Reconstruction reconstruct(std::span<const QVector> x, std::span<const QVector> y, const QVector& u);

struct ExtensionReport {
  QMatrix W;               // W x_k = y_k
  double norm = 0.0;       // |W|
  double lower_x = 0.0;    // A: lower Riesz-sequence bound of X
  double bessel_y = 0.0;   // B: lambda_max(Gram(Y))
  double bound = 0.0;      // sqrt(B / A)
  bool within_bound = false;
};

/// The unique right-linear W with W x_k = y_k, for X complete with a positive
/// lower Riesz-sequence bound. Throws Error(NotComplete) or
/// Error(LowerBoundZero) when X is not admissible.
ExtensionReport extend_operator(std::span<const QVector> x, std::span<const QVector> y,
                                const Tolerances& tol = {});

/// Bounds of the subfamily selected by indices. Throws Error(EmptyFamily) for
/// no indices, Error(InvalidInput) for out-of-range or repeated ones.
RieszSequenceBounds subfamily_bounds(std::span<const QVector> family, std::span<const std::size_t> indices,
                                     const Tolerances& tol = {});

/// Expresses the family in an orthonormal basis of its span and checks it is
/// a Riesz basis of that span.
RieszBasisCheck riesz_basis_for_span(std::span<const QVector> family, const Tolerances& tol = {});

}  // namespace qframes

#pragma once

namespace qframes {

/// Numerical tolerances shared by every module and echoed in every report.
///
/// `eq` is an absolute componentwise tolerance for equality-style checks.
/// `rank` is relative: a pivot or eigenvalue counts as zero when it is at most
/// `rank` times the largest entry modulus of the matrix under test.
/// `spec` governs spectral comparisons (eigenvalue clustering, tightness).
struct Tolerances {
  double eq = 1e-9;
  double rank = 1e-8;
  double spec = 1e-7;

  double rank_threshold(double largest_modulus) const noexcept { return rank * largest_modulus; }
};

inline constexpr double kDefaultEqTolerance = 1e-9;

}  // namespace qframes

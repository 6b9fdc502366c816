#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"
#include "qframes/tolerances.hpp"

namespace qframes {

/// A finite family {u_i} of m vectors in H^n. Zero vectors are allowed; an
/// empty family is rejected with Error(InvalidInput).
class FrameSystem {
public:
  explicit FrameSystem(std::vector<QVector> vectors);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return vectors_.size(); }
  std::span<const QVector> vectors() const noexcept { return vectors_; }
  const QVector& operator[](std::size_t i) const noexcept { return vectors_[i]; }

  /// n x m matrix with the family as columns; the synthesis operator.
  const QMatrix& synthesis_matrix() const noexcept { return synthesis_; }

private:
  std::vector<QVector> vectors_;
  std::size_t n_;
  QMatrix synthesis_;
};

/// T q = sum_i u_i q_i.
QVector synthesis(const FrameSystem& frame, const QVector& coefficients);

/// T* u = (<u_i|u>)_i.
QVector analysis(const FrameSystem& frame, const QVector& u);

/// S = T T*, so S u = sum_i u_i <u_i|u>. Hermitian positive semidefinite.
QMatrix frame_operator(const FrameSystem& frame);

/// sum_i |<u_i|u>|^2, the middle term of the frame inequality.
double frame_sum(const FrameSystem& frame, const QVector& u);

struct FrameReport {
  std::size_t n = 0;
  std::size_t m = 0;
  bool is_bessel = true;
  bool is_frame = false;
  double lower_bound = 0.0;  // lambda_min(S): the optimal lower frame bound
  double upper_bound = 0.0;  // lambda_max(S): the optimal (Bessel) upper bound
  bool tight = false;
  bool parseval = false;
  bool exact = false;
  Tolerances tolerances;
};

/// Optimal frame bounds and the tight / Parseval / exact classification.
///
/// The family is a frame when lambda_min(S) exceeds the rank threshold of S.
/// Tight means |r1 - r2| <= tol.spec, Parseval additionally |r1 - 1| <= tol.spec.
/// Exact means every leave-one-out subfamily has rank below n.
FrameReport analyze(const FrameSystem& frame, const Tolerances& tol = {});

}  // namespace qframes

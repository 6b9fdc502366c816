#include "qframes/frames.hpp"

#include <cmath>
#include <string>

#include "qframes/elimination.hpp"
#include "qframes/error.hpp"
#include "qframes/spectrum.hpp"

namespace qframes {

namespace {

QMatrix checked_synthesis(const std::vector<QVector>& vectors) {
  if (vectors.empty()) throw Error(ErrorKind::InvalidInput, "a frame needs at least one vector");
  return QMatrix::from_columns(vectors);
}

bool spans_without(const FrameSystem& frame, std::size_t skip, const Tolerances& tol) {
  if (frame.m() == 1) return false;
  std::vector<QVector> rest;
  rest.reserve(frame.m() - 1);
  for (std::size_t i = 0; i < frame.m(); ++i) {
    if (i != skip) rest.push_back(frame[i]);
  }
  return is_complete(rest, frame.n(), tol);
}

}  // namespace

FrameSystem::FrameSystem(std::vector<QVector> vectors)
    : vectors_(std::move(vectors)),
      n_(vectors_.empty() ? 0 : vectors_.front().size()),
      synthesis_(checked_synthesis(vectors_)) {}

QVector synthesis(const FrameSystem& frame, const QVector& coefficients) {
  if (coefficients.size() != frame.m()) {
    throw Error(ErrorKind::DimensionMismatch, "synthesis: expected " + std::to_string(frame.m()) +
                                                  " coefficients, got " +
                                                  std::to_string(coefficients.size()));
  }
  return frame.synthesis_matrix() * coefficients;
}

QVector analysis(const FrameSystem& frame, const QVector& u) {
  if (u.size() != frame.n()) {
    throw Error(ErrorKind::DimensionMismatch, "analysis: vector length " + std::to_string(u.size()) +
                                                  ", ambient dimension " + std::to_string(frame.n()));
  }
  QVector coefficients(frame.m());
  for (std::size_t i = 0; i < frame.m(); ++i) coefficients[i] = inner(frame[i], u);
  return coefficients;
}

QMatrix frame_operator(const FrameSystem& frame) {
  const QMatrix& t = frame.synthesis_matrix();
  return t * adjoint(t);
}

double frame_sum(const FrameSystem& frame, const QVector& u) { return norm_squared(analysis(frame, u)); }

FrameReport analyze(const FrameSystem& frame, const Tolerances& tol) {
  const QMatrix s = frame_operator(frame);
  const HermitianEigen eig = hermitian_eigen(s, tol);

  FrameReport report;
  report.n = frame.n();
  report.m = frame.m();
  report.tolerances = tol;
  report.is_bessel = true;  // every finite family is Bessel with bound lambda_max(S)
  report.lower_bound = std::max(0.0, eig.values.front());
  report.upper_bound = std::max(0.0, eig.values.back());
  report.is_frame = report.lower_bound > tol.rank_threshold(s.max_modulus());
  if (!report.is_frame) return report;

  report.tight = std::abs(report.upper_bound - report.lower_bound) <= tol.spec;
  report.parseval = report.tight && std::abs(report.lower_bound - 1.0) <= tol.spec;
  report.exact = true;
  for (std::size_t i = 0; i < frame.m() && report.exact; ++i) {
    if (spans_without(frame, i, tol)) report.exact = false;
  }
  return report;
}

}  // namespace qframes

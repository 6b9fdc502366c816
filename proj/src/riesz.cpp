#include "qframes/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qframes/elimination.hpp"
#include "qframes/error.hpp"
#include "qframes/spectrum.hpp"

namespace qframes {

namespace {

std::size_t require_uniform(std::span<const QVector> family, const char* what) {
  if (family.empty()) throw Error(ErrorKind::EmptyFamily, std::string(what) + ": empty family");
  const std::size_t n = family.front().size();
  for (const auto& v : family) {
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": vector lengths differ");
  }
  return n;
}

double max_entry(std::span<const QVector> family) {
  double m = 0.0;
  for (const auto& v : family) {
    for (const auto& q : v) m = std::max(m, modulus(q));
  }
  return m;
}

}  // namespace

std::string_view failure_tag(RieszFailure f) noexcept {
  switch (f) {
    case RieszFailure::NotComplete: return "NOT_COMPLETE";
    case RieszFailure::LowerBoundZero: return "LOWER_BOUND_ZERO";
    case RieszFailure::NotInvertible: return "NOT_INVERTIBLE";
  }
  return "UNKNOWN";
}

RieszCertificate make_riesz(const QMatrix& u, const Tolerances& tol) {
  if (!u.is_square()) throw Error(ErrorKind::DimensionMismatch, "make_riesz: U must be square");
  return make_riesz(u, standard_basis(u.rows()), tol);
}

RieszCertificate make_riesz(const QMatrix& u, std::span<const QVector> orthonormal_basis, const Tolerances& tol) {
  if (!u.is_square()) throw Error(ErrorKind::DimensionMismatch, "make_riesz: U must be square");
  const std::size_t n = u.rows();
  if (orthonormal_basis.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "make_riesz: basis has " +
                                                  std::to_string(orthonormal_basis.size()) +
                                                  " vectors, expected " + std::to_string(n));
  }
  for (const auto& e : orthonormal_basis) {
    if (e.size() != n) throw Error(ErrorKind::DimensionMismatch, "make_riesz: basis vector length");
  }
  const double defect = orthonormality_defect(orthonormal_basis);
  if (defect > tol.eq) {
    throw Error(ErrorKind::NotOrthonormal, "basis deviates from orthonormal by " + std::to_string(defect));
  }

  const QMatrix u_inv = invert(u, tol);
  const QMatrix dual_map = adjoint(u_inv);

  RieszCertificate cert{u, {}, {}, {}, 0.0, 0.0, tol};
  cert.N.assign(orthonormal_basis.begin(), orthonormal_basis.end());
  for (const auto& e : orthonormal_basis) {
    cert.X.push_back(u * e);
    cert.Y.push_back(dual_map * e);
  }
  const double norm_u = op_norm(u, tol);
  const double norm_u_inv = op_norm(u_inv, tol);
  cert.upper = norm_u * norm_u;
  cert.lower = 1.0 / (norm_u_inv * norm_u_inv);
  return cert;
}

QMatrix gram_matrix(std::span<const QVector> family) {
  const QMatrix t = QMatrix::from_columns(family);
  return adjoint(t) * t;
}

RieszSequenceBounds riesz_sequence_bounds(std::span<const QVector> family, const Tolerances& tol) {
  require_uniform(family, "riesz_sequence_bounds");
  RieszSequenceBounds b{0.0, 0.0, gram_matrix(family), false, std::nullopt};
  const HermitianEigen eig = hermitian_eigen(b.gram, tol);
  b.lower = std::max(0.0, eig.values.front());
  b.upper = std::max(0.0, eig.values.back());
  b.is_riesz_sequence = b.lower > tol.rank_threshold(b.gram.max_modulus());
  if (!b.is_riesz_sequence) b.null_direction = eig.vectors.front();
  return b;
}

RieszBasisCheck is_riesz_basis(std::span<const QVector> family, const Tolerances& tol) {
  const std::size_t n = require_uniform(family, "is_riesz_basis");
  RieszBasisCheck check{n, is_complete(family, n, tol), riesz_sequence_bounds(family, tol), false, false, std::nullopt, {}};
  check.gram_direction = check.complete && check.bounds.is_riesz_sequence;

  std::optional<RieszCertificate> cert;
  if (family.size() == check.n) {
    try {
      cert = make_riesz(QMatrix::from_columns(family), tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Singular) throw;
    }
  }
  check.operator_direction = cert.has_value();

  if (!check.bounds.is_riesz_sequence) check.failures.push_back(RieszFailure::LowerBoundZero);
  if (!check.complete) check.failures.push_back(RieszFailure::NotComplete);
  if (!check.operator_direction) check.failures.push_back(RieszFailure::NotInvertible);

  if (check.gram_direction && check.operator_direction) check.certificate = std::move(cert);
  return check;
}

DualComputation dual_paths(std::span<const QVector> family, const Tolerances& tol) {
  const QMatrix u = QMatrix::from_columns(family);
  if (!u.is_square()) throw Error(ErrorKind::NotRieszBasis, "a Riesz basis of H^n has exactly n vectors");

  DualComputation d;
  d.by_operator = invert(adjoint(u), tol).columns();

  const QMatrix s = u * adjoint(u);
  for (const auto& x : family) d.canonical.push_back(solve(s, x, tol));

  const double scale = std::max(1.0, max_entry(d.by_operator));
  for (std::size_t k = 0; k < family.size(); ++k) {
    d.discrepancy = std::max(d.discrepancy, max_abs_diff(d.by_operator[k], d.canonical[k]) / scale);
  }
  return d;
}

std::vector<QVector> dual_riesz(std::span<const QVector> family, const Tolerances& tol) {
  const RieszBasisCheck check = is_riesz_basis(family, tol);
  if (!check.is_riesz_basis()) {
    throw Error(ErrorKind::NotRieszBasis, std::string(failure_tag(*check.tag())));
  }
  DualComputation d = dual_paths(family, tol);
  if (d.discrepancy > kDualAgreement) {
    throw Error(ErrorKind::DualMismatch, "(U*)^{-1} and S^{-1}X differ by " + std::to_string(d.discrepancy));
  }
  return std::move(d.by_operator);
}

Reconstruction reconstruct(std::span<const QVector> x, std::span<const QVector> y, const QVector& u) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::DimensionMismatch, "reconstruct: |X| = " + std::to_string(x.size()) +
                                                  ", |Y| = " + std::to_string(y.size()));
  }
  const std::size_t n = require_uniform(x, "reconstruct");
  if (require_uniform(y, "reconstruct") != n || u.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "reconstruct: ambient dimensions differ");
  }

  std::vector<Quaternion> cy, cx;
  cy.reserve(x.size());
  cx.reserve(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    cy.push_back(inner(y[k], u));
    cx.push_back(inner(x[k], u));
  }
  Reconstruction r{combine(x, cy), combine(y, cx), 0.0, 0.0};
  r.residual_x = norm(r.via_x - u);
  r.residual_y = norm(r.via_y - u);
  return r;
}

ExtensionReport extend_operator(std::span<const QVector> x, std::span<const QVector> y, const Tolerances& tol) {
  const std::size_t n = require_uniform(x, "extend_operator");
  require_uniform(y, "extend_operator");
  if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "extend_operator: |X| != |Y|");
  if (!is_complete(x, n, tol)) throw Error(ErrorKind::NotComplete, "X does not span H^n");
  const RieszSequenceBounds bx = riesz_sequence_bounds(x, tol);
  if (!bx.is_riesz_sequence) throw Error(ErrorKind::LowerBoundZero, "X has no positive lower Riesz bound");

  ExtensionReport r{QMatrix::from_columns(y) * invert(QMatrix::from_columns(x), tol), 0.0, bx.lower, 0.0, 0.0, false};
  r.norm = op_norm(r.W, tol);
  r.bessel_y = std::max(0.0, hermitian_eigen(gram_matrix(y), tol).values.back());
  r.bound = std::sqrt(r.bessel_y / r.lower_x);
  r.within_bound = r.norm <= r.bound + tol.spec;
  return r;
}

RieszSequenceBounds subfamily_bounds(std::span<const QVector> family, std::span<const std::size_t> indices,
                                     const Tolerances& tol) {
  if (indices.empty()) throw Error(ErrorKind::EmptyFamily, "subfamily_bounds: no indices");
  std::vector<bool> seen(family.size(), false);
  std::vector<QVector> sub;
  sub.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= family.size() || seen[i]) {
      throw Error(ErrorKind::InvalidInput, "subfamily index " + std::to_string(i) + " is out of range or repeated");
    }
    seen[i] = true;
    sub.push_back(family[i]);
  }
  return riesz_sequence_bounds(sub, tol);
}

RieszBasisCheck riesz_basis_for_span(std::span<const QVector> family, const Tolerances& tol) {
  require_uniform(family, "riesz_basis_for_span");
  const auto pivots = pivot_columns(QMatrix::from_columns(family), tol);
  if (pivots.empty()) {
    RieszBasisCheck check{0, false, riesz_sequence_bounds(family, tol), false, false, std::nullopt, {}};
    check.failures = {RieszFailure::LowerBoundZero, RieszFailure::NotInvertible};
    return check;
  }

  std::vector<QVector> independent;
  for (std::size_t p : pivots) independent.push_back(family[p]);
  const auto basis = gram_schmidt(independent, tol);

  std::vector<QVector> coordinates;
  coordinates.reserve(family.size());
  for (const auto& x : family) {
    QVector c(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) c[k] = inner(basis[k], x);
    coordinates.push_back(std::move(c));
  }
  return is_riesz_basis(coordinates, tol);
}

}  // namespace qframes

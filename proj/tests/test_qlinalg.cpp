#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "qframes/elimination.hpp"
#include "qframes/error.hpp"
#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"
#include "test_support.hpp"

using namespace qframes;
using qtest::Random;
using qtest::re;
using qtest::vec;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidInput;
}

// Real rank of the embedding through an independent LU.
std::size_t embedded_rank(const QMatrix& a) {
  const RealMatrix e = embed_real(a);
  Eigen::MatrixXd m(e.rows(), e.cols());
  for (std::size_t i = 0; i < e.rows(); ++i) {
    for (std::size_t j = 0; j < e.cols(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = e(i, j);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  return static_cast<std::size_t>(lu.rank());
}

}  // namespace

TEST_SUITE("inner product and norm") {
  TEST_CASE("inner product examples") {
    CHECK(inner(vec({kI, kJ}), vec({kI, kJ})) == re(2));
    CHECK(inner(vec({kI}), vec({kJ})) == -kK);
    CHECK(inner(vec({kJ}), vec({kI})) == kK);
    CHECK(inner(vec({kJ}), vec({kI})) == conj(inner(vec({kI}), vec({kJ}))));
    CHECK(inner(vec({Quaternion(1, 2, 3, 4), kI}), QVector(2)) == kZero);
    CHECK(kind_of([] { (void)inner(QVector(2), QVector(3)); }) == ErrorKind::DimensionMismatch);
  }

  TEST_CASE("norm examples") {
    CHECK(norm(QVector::basis(3, 1)) == 1.0);
    CHECK(norm(vec({Quaternion(1, 1, 0, 0), kZero})) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    const QVector v = vec({Quaternion(1, -2, 0.5, 3), Quaternion(0, 1, 1, -1)});
    const Quaternion q(0.5, 2, -1, 0.25);
    CHECK(norm(v * q) == doctest::Approx(norm(v) * modulus(q)).epsilon(1e-14));
  }

  TEST_CASE("empty vectors are rejected") {
    CHECK(kind_of([] { QVector v(0); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { QVector v(std::vector<Quaternion>{}); }) == ErrorKind::InvalidInput);
  }

  TEST_CASE("inner product axioms, Cauchy-Schwarz and the norm laws") {
    Random rng(7);
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = rng.index(1, 6);
      const QVector u = rng.vector(n), v = rng.vector(n), w = rng.vector(n);
      const Quaternion q = rng.quaternion();

      CHECK(max_abs_diff(conj(inner(u, v)), inner(v, u)) <= 1e-12);
      CHECK(inner(u, u).real() > 0.0);
      CHECK(std::abs(inner(u, u).imag().x1()) + std::abs(inner(u, u).imag().x2()) +
                std::abs(inner(u, u).imag().x3()) <= 1e-12);
      CHECK(max_abs_diff(inner(v, u + w), inner(v, u) + inner(v, w)) <= 1e-12);
      CHECK(max_abs_diff(inner(v, u * q), inner(v, u) * q) <= 1e-12);
      CHECK(max_abs_diff(inner(v * q, u), conj(q) * inner(v, u)) <= 1e-12);

      const double lhs = modulus_squared(inner(u, v));
      const double rhs = inner(u, u).real() * inner(v, v).real();
      CHECK(lhs <= rhs + 1e-9);
      CHECK(norm(u + v) <= norm(u) + norm(v) + 1e-12);
      CHECK(std::abs(norm(u * q) - norm(u) * modulus(q)) <= 1e-12);
    }
    CHECK(norm(QVector(4)) == 0.0);
  }
}

TEST_SUITE("matrices") {
  TEST_CASE("adjoint examples") {
    CHECK(adjoint(QMatrix::identity(3)) == QMatrix::identity(3));
    CHECK(adjoint(QMatrix{{kI}}) == QMatrix{{-kI}});
    Random rng(3);
    const QMatrix a = rng.matrix(3, 2);
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(adjoint(a).rows() == 2);
  }

  TEST_CASE("product examples") {
    Random rng(5);
    const QMatrix a = rng.matrix(3, 3), b = rng.matrix(3, 2);
    CHECK(QMatrix::identity(3) * a == a);
    CHECK(QMatrix{{kI}} * QMatrix{{kJ}} == QMatrix{{kK}});
    CHECK(max_abs_diff(adjoint(a * b), adjoint(b) * adjoint(a)) <= 1e-14);
    CHECK(kind_of([&] { (void)(b * a); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([&] { (void)(a + b); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([&] { (void)(a * QVector(2)); }) == ErrorKind::DimensionMismatch);
  }

  TEST_CASE("adjoint contract and right linearity") {
    Random rng(17);
    for (int t = 0; t < 100; ++t) {
      const std::size_t m = rng.index(1, 5), n = rng.index(1, 5);
      const QMatrix a = rng.matrix(m, n);
      const QVector u = rng.vector(n), v = rng.vector(m);
      const Quaternion q = rng.quaternion();
      CHECK(max_abs_diff(inner(v, a * u), inner(adjoint(a) * v, u)) <= 1e-9);
      CHECK(max_abs_diff(a * (u * q), (a * u) * q) <= 1e-12);
      const QMatrix b = rng.matrix(m, n);
      CHECK(max_abs_diff(adjoint(a + b), adjoint(a) + adjoint(b)) <= 1e-15);
    }
  }

  TEST_CASE("from_columns round trip") {
    Random rng(1);
    const auto cols = rng.family(3, 4);
    const QMatrix a = QMatrix::from_columns(cols);
    CHECK(a.rows() == 3);
    CHECK(a.cols() == 4);
    CHECK(a.columns() == cols);
    std::vector<QVector> ragged{QVector(2), QVector(3)};
    CHECK(kind_of([&] { (void)QMatrix::from_columns(ragged); }) == ErrorKind::DimensionMismatch);
  }
}

TEST_SUITE("real embedding") {
  TEST_CASE("embedding examples") {
    CHECK(embed_real(QMatrix(1, 1)) == RealMatrix(4, 4));
    CHECK(embed_real(QMatrix{{kOne}}) == RealMatrix::identity(4));
    CHECK(embed_real(QMatrix{{kI}}) * embed_real(QMatrix{{kJ}}) == embed_real(QMatrix{{kK}}));
  }

  TEST_CASE("homomorphism, adjoint as transpose, vector action") {
    Random rng(23);
    for (int t = 0; t < 50; ++t) {
      const std::size_t m = rng.index(1, 4), k = rng.index(1, 4), n = rng.index(1, 4);
      const QMatrix a = rng.matrix(m, k), b = rng.matrix(k, n);
      CHECK(max_abs_diff(embed_real(a * b), embed_real(a) * embed_real(b)) <= 1e-12);
      CHECK(embed_real(adjoint(a)) == transpose(embed_real(a)));

      const QVector v = rng.vector(k);
      const RealMatrix e = embed_real(a);
      const auto stacked = stack_components(v);
      std::vector<double> image(4 * m, 0.0);
      for (std::size_t r = 0; r < 4 * m; ++r) {
        for (std::size_t c = 0; c < 4 * k; ++c) image[r] += e(r, c) * stacked[c];
      }
      CHECK(max_abs_diff(unstack_components(image), a * v) <= 1e-12);
    }
  }
}

TEST_SUITE("elimination") {
  TEST_CASE("invert and rank examples") {
    CHECK(invert(QMatrix::identity(3) * 2.0) == QMatrix::identity(3) * 0.5);
    CHECK(invert(QMatrix{{kI}}) == QMatrix{{-kI}});
    const std::vector<QVector> cols{QVector::basis(2, 0), QVector::basis(2, 0), QVector::basis(2, 1)};
    CHECK(rank(QMatrix::from_columns(cols)) == 2);
    CHECK(rank(QMatrix(3, 3)) == 0);
    CHECK(pivot_columns(QMatrix::from_columns(cols)) == std::vector<std::size_t>{0, 2});
  }

  TEST_CASE("singular systems are reported") {
    const QMatrix s{{kOne, kI}, {kJ, kJ * kI}};  // second column = first column times i
    CHECK(rank(s) == 1);
    CHECK(kind_of([&] { (void)invert(s); }) == ErrorKind::Singular);
    CHECK(kind_of([&] { (void)solve(s, vec({kOne, kOne})); }) == ErrorKind::Singular);
    CHECK(kind_of([&] { (void)invert(QMatrix(2, 3)); }) == ErrorKind::DimensionMismatch);
  }

  TEST_CASE("solve on a non-commutative 2x2 system") {
    // A = [[i, j], [1, k]], x = (1 + j, i); A x = (i + ij + ji, 1 + j + ki) = (i, 1 + 2j)
    const QMatrix a{{kI, kJ}, {kOne, kK}};
    const QVector x = vec({Quaternion(1, 0, 1, 0), kI});
    const QVector b = a * x;
    CHECK(approx_equal(b, vec({kI, Quaternion(1, 0, 2, 0)}), 1e-15));
    CHECK(approx_equal(solve(a, b), x, 1e-14));
  }

  TEST_CASE("random invertible matrices") {
    Random rng(31);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = rng.index(1, 5);
      const QMatrix a = rng.matrix(n, n);
      const QMatrix inv = invert(a);
      CHECK(max_abs_diff(a * inv, QMatrix::identity(n)) <= 1e-8);
      CHECK(max_abs_diff(inv * a, QMatrix::identity(n)) <= 1e-8);
      const QVector b = rng.vector(n);
      CHECK(max_abs_diff(a * solve(a, b), b) <= 1e-9);
      CHECK(rank(a) == n);
      CHECK(embedded_rank(a) == 4 * rank(a));
    }
  }

  TEST_CASE("rank of random low-rank products matches the embedding") {
    Random rng(37);
    for (int t = 0; t < 60; ++t) {
      const std::size_t m = rng.index(1, 5), n = rng.index(1, 5), r = rng.index(1, std::min(m, n));
      const QMatrix a = rng.matrix(m, r) * rng.matrix(r, n);
      CHECK(rank(a) == r);
      CHECK(embedded_rank(a) == 4 * rank(a));
    }
  }

  TEST_CASE("null space and orthogonal complement") {
    Random rng(41);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = rng.index(2, 6), k = rng.index(1, n - 1);
      const auto family = rng.family(n, k);
      const auto comp = orth_complement(family, n);
      REQUIRE(comp.size() == n - k);
      CHECK(orthonormality_defect(comp) <= 1e-12);
      for (const auto& v : comp) {
        for (const auto& u : family) CHECK(modulus(inner(v, u)) <= 1e-12);
      }
      const QMatrix a = rng.matrix(k, n);
      for (const auto& x : null_space(a)) CHECK(max_abs_diff(a * x, QVector(k)) <= 1e-12);
    }
    const std::vector<QVector> e1{QVector::basis(2, 0)};
    const auto c = orth_complement(e1, 2);
    REQUIRE(c.size() == 1);
    CHECK(modulus(c[0][1]) == doctest::Approx(1.0));
    CHECK(orth_complement(standard_basis(3), 3).empty());
    CHECK(orth_complement(std::vector<QVector>{}, 2).size() == 2);
  }

  TEST_CASE("completeness") {
    CHECK(is_complete(standard_basis(3), 3));
    const std::vector<QVector> e1{QVector::basis(2, 0)};
    CHECK_FALSE(is_complete(e1, 2));
    const std::vector<QVector> dup{QVector::basis(2, 0), QVector::basis(2, 0) * kK};
    CHECK_FALSE(is_complete(dup, 2));
  }
}

TEST_SUITE("gram_schmidt") {
  TEST_CASE("examples") {
    CHECK(gram_schmidt(standard_basis(2)) == standard_basis(2));
    const std::vector<QVector> two{vec({re(2), kZero})};
    CHECK(gram_schmidt(two) == std::vector<QVector>{QVector::basis(2, 0)});
    const std::vector<QVector> skew{vec({kOne, kZero}), vec({kOne, kOne})};
    const auto out = gram_schmidt(skew);
    CHECK(approx_equal(out[0], QVector::basis(2, 0), 1e-15));
    CHECK(approx_equal(out[1], QVector::basis(2, 1), 1e-15));
  }

  TEST_CASE("dependent input") {
    const std::vector<QVector> dep{vec({kOne, kI}), vec({kJ, kI * kJ})};  // second = first times j
    CHECK(kind_of([&] { (void)gram_schmidt(dep); }) == ErrorKind::DependentInput);
  }

  TEST_CASE("Parseval identity and expansion for orthonormalized bases") {
    Random rng(43);
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = rng.index(2, 6);
      const auto basis = gram_schmidt(rng.family(n, n));
      CHECK(orthonormality_defect(basis) <= 1e-12);
      const QVector u = rng.vector(n);
      double energy = 0.0;
      QVector expansion(n);
      for (const auto& z : basis) {
        const Quaternion c = inner(z, u);
        energy += modulus_squared(c);
        expansion += z * c;
      }
      CHECK(std::abs(norm_squared(u) - energy) <= 1e-9);
      CHECK(norm(u - expansion) <= 1e-9);
    }
  }
}

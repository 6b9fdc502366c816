#include <cmath>
#include <limits>

#include "doctest.h"
#include "qframes/error.hpp"
#include "qframes/quaternion.hpp"
#include "test_support.hpp"

using namespace qframes;
using qtest::Random;

TEST_CASE("Hamilton product follows the unit rules") {
  CHECK(kI * kJ == kK);
  CHECK(kJ * kK == kI);
  CHECK(kK * kI == kJ);
  CHECK(kJ * kI == -kK);
  CHECK(kI * kI == -kOne);
  CHECK(kJ * kJ == -kOne);
  CHECK(kK * kK == -kOne);
  CHECK(kI * kJ == -(kJ * kI));
}

TEST_CASE("product examples") {
  const Quaternion q(0.3, -1.2, 2.5, 0.7);
  CHECK(q * kOne == q);
  CHECK(kOne * q == q);
  // (1 + i)(1 + j) = 1 + j + i + ij = 1 + i + j + k
  CHECK(Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0) == Quaternion(1, 1, 1, 1));
}

TEST_CASE("product agrees with the Cayley-Dickson construction") {
  Random rng(11);
  for (int t = 0; t < 200; ++t) {
    const Quaternion p = rng.quaternion(), q = rng.quaternion();
    CHECK(max_abs_diff(p * q, qtest::cayley_dickson_product(p, q)) <= 1e-15);
  }
}

TEST_CASE("conjugate") {
  CHECK(conj(Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4));
  CHECK(conj(Quaternion(-2.5)) == Quaternion(-2.5));
  const Quaternion q(0.1, 0.2, -0.3, 0.4);
  CHECK(conj(conj(q)) == q);
}

TEST_CASE("modulus") {
  CHECK(modulus(Quaternion(1, 2, 3, 4)) == doctest::Approx(std::sqrt(30.0)).epsilon(1e-15));
  CHECK(modulus(kZero) == 0.0);
  CHECK(modulus(kI) == 1.0);
  CHECK(modulus_squared(Quaternion(1, 2, 3, 4)) == 30.0);
}

TEST_CASE("inverse") {
  CHECK(approx_equal(inverse(Quaternion(1, 1, 0, 0)), Quaternion(0.5, -0.5, 0, 0), 1e-15));
  CHECK(inverse(kOne) == kOne);
  CHECK(inverse(Quaternion(2.0)) == Quaternion(0.5));
  CHECK(inverse(kI) == -kI);

  try {
    (void)inverse(kZero);
    FAIL("expected ZeroDivisor");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDivisor);
  }
}

TEST_CASE("constructor rejects non-finite components") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Quaternion{nan}, Error);
  CHECK_THROWS_AS(Quaternion(0, inf, 0, 0), Error);
  CHECK_THROWS_AS(Quaternion(0, 0, -inf, 0), Error);
  CHECK_THROWS_AS(Quaternion(0, 0, 0, nan), Error);
  CHECK_NOTHROW(Quaternion(1e308, -1e308, 0, 0));
}

TEST_CASE("real and imaginary parts") {
  const Quaternion q(1.5, -2, 3, 0.25);
  CHECK(q.real() == 1.5);
  CHECK(q.imag() == Quaternion(0, -2, 3, 0.25));
  CHECK(Quaternion(q.real()) + q.imag() == q);
}

TEST_CASE("algebraic properties on random inputs") {
  Random rng(2024);
  for (int t = 0; t < 500; ++t) {
    const Quaternion p = rng.quaternion();
    const Quaternion q = rng.nonzero_quaternion();

    CHECK(std::abs(modulus(p * q) - modulus(p) * modulus(q)) <= 1e-12);
    CHECK(max_abs_diff(conj(p * q), conj(q) * conj(p)) <= 1e-12);
    CHECK(max_abs_diff(q * inverse(q), kOne) <= 1e-12);
    CHECK(max_abs_diff(inverse(q) * q, kOne) <= 1e-12);

    const Quaternion qq = conj(p) * p;
    CHECK(std::abs(qq.real() - modulus_squared(p)) <= 1e-12);
    CHECK(max_abs_diff(qq.imag(), kZero) <= 1e-12);
  }
}

TEST_CASE("approx_equal uses an absolute componentwise tolerance") {
  const Quaternion q(1, 2, 3, 4);
  CHECK(approx_equal(q, q + Quaternion(0, 0, 5e-10, 0)));
  CHECK_FALSE(approx_equal(q, q + Quaternion(0, 0, 2e-9, 0)));
  CHECK(approx_equal(q, q + Quaternion(0, 0, 2e-9, 0), 1e-8));
}

#include "qframes/quaternion.hpp"

#include <algorithm>
#include <ostream>

#include "qframes/error.hpp"

namespace qframes {

Quaternion::Quaternion(double x0, double x1, double x2, double x3)
    : x0_(x0), x1_(x1), x2_(x2), x3_(x3) {
  if (!(std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3))) {
    throw Error(ErrorKind::InvalidInput, "quaternion component is not finite");
  }
}

Quaternion inverse(const Quaternion& q) {
  if (q.is_zero()) {
    throw Error(ErrorKind::ZeroDivisor, "inverse of the zero quaternion");
  }
  return conj(q) / modulus_squared(q);
}

double max_abs_diff(const Quaternion& p, const Quaternion& q) noexcept {
  return std::max({std::abs(p.x0() - q.x0()), std::abs(p.x1() - q.x1()),
                   std::abs(p.x2() - q.x2()), std::abs(p.x3() - q.x3())});
}

bool approx_equal(const Quaternion& p, const Quaternion& q, double tol) noexcept {
  return max_abs_diff(p, q) <= tol;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.x0() << ", " << q.x1() << ", " << q.x2() << ", " << q.x3() << ']';
}

}  // namespace qframes

#include "qframes/gen.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "qframes/elimination.hpp"
#include "qframes/error.hpp"
#include "qframes/spectrum.hpp"

namespace qframes {

namespace {

constexpr int kMaxAttempts = 100;

// A random square matrix with sigma_max / sigma_min <= cap.
QMatrix conditioned_matrix(SplitMix64& rng, std::size_t n, double cap) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    QMatrix u = gen_matrix(rng, n, n);
    const HermitianEigen eig = hermitian_eigen(adjoint(u) * u);
    const double lo = eig.values.front(), hi = eig.values.back();
    if (lo > 0.0 && std::sqrt(hi / lo) <= cap) return u;
  }
  throw Error(ErrorKind::GenerationFailure, "no matrix within the condition cap after 100 draws");
}

void require(bool ok, const std::string& why) {
  if (!ok) throw Error(ErrorKind::InvalidConfig, why);
}

}  // namespace

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::ONB: return "ONB";
    case FamilyKind::RIESZ: return "RIESZ";
    case FamilyKind::FRAME: return "FRAME";
    case FamilyKind::BESSEL_ONLY: return "BESSEL_ONLY";
    case FamilyKind::RANK_DEFICIENT: return "RANK_DEFICIENT";
    case FamilyKind::OVERCOMPLETE: return "OVERCOMPLETE";
  }
  return "UNKNOWN";
}

FamilyKind parse_family_kind(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) {
    return c == '-' ? '_' : static_cast<char>(std::toupper(c));
  });
  for (auto kind : {FamilyKind::ONB, FamilyKind::RIESZ, FamilyKind::FRAME, FamilyKind::BESSEL_ONLY,
                    FamilyKind::RANK_DEFICIENT, FamilyKind::OVERCOMPLETE}) {
    if (to_string(kind) == upper) return kind;
  }
  throw Error(ErrorKind::InvalidConfig, "unknown family kind '" + std::string(name) + "'");
}

Quaternion gen_quaternion(SplitMix64& rng) {
  const double x0 = rng.uniform();
  const double x1 = rng.uniform();
  const double x2 = rng.uniform();
  const double x3 = rng.uniform();
  return Quaternion(x0, x1, x2, x3);
}

QVector gen_vector(SplitMix64& rng, std::size_t n) {
  QVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = gen_quaternion(rng);
  return v;
}

QMatrix gen_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  QMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = gen_quaternion(rng);
  }
  return m;
}

GeneratedFamily gen_family(const GenConfig& config) {
  const std::size_t n = config.dim, m = config.count;
  require(n >= 1, "dim must be at least 1");
  require(m >= 1, "count must be at least 1");
  require(std::isfinite(config.condition_cap) && config.condition_cap >= 1.0, "condition_cap must be >= 1");

  SplitMix64 rng(config.seed);
  GeneratedFamily out{config, {}, std::nullopt};

  switch (config.kind) {
    case FamilyKind::ONB: {
      require(m <= n, "ONB needs count <= dim");
      const auto basis = gram_schmidt(conditioned_matrix(rng, n, config.condition_cap).columns());
      out.vectors.assign(basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(m));
      break;
    }
    case FamilyKind::RIESZ: {
      require(m == n, "RIESZ needs count == dim");
      QMatrix u = conditioned_matrix(rng, n, config.condition_cap);
      out.vectors = u.columns();
      out.U = std::move(u);
      break;
    }
    case FamilyKind::FRAME:
    case FamilyKind::OVERCOMPLETE: {
      if (config.kind == FamilyKind::FRAME) {
        require(m >= n, "FRAME needs count >= dim");
      } else {
        require(m > n, "OVERCOMPLETE needs count > dim");
      }
      out.vectors = conditioned_matrix(rng, n, config.condition_cap).columns();
      for (std::size_t i = n; i < m; ++i) out.vectors.push_back(gen_vector(rng, n));
      break;
    }
    case FamilyKind::BESSEL_ONLY: {
      require(m < n, "BESSEL_ONLY needs count < dim");
      for (std::size_t i = 0; i < m; ++i) out.vectors.push_back(gen_vector(rng, n));
      break;
    }
    case FamilyKind::RANK_DEFICIENT: {
      require(m >= 2, "RANK_DEFICIENT needs count >= 2");
      for (std::size_t i = 0; i + 1 < m; ++i) out.vectors.push_back(gen_vector(rng, n));
      out.vectors.push_back(out.vectors.front());
      break;
    }
  }
  return out;
}

}  // namespace qframes

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"
#include "qframes/quaternion.hpp"

namespace qframes {

/// SplitMix64 (Steele, Lea and Flood). The state advances by
/// 0x9E3779B97F4A7C15 per draw and the output is the standard mix
///
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z ^ (z >> 31)
///
/// uniform() maps the top 53 bits to [0, 1) and then affinely to [-1, 1).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() noexcept {
    const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return 2.0 * unit - 1.0;
  }

private:
  std::uint64_t state_;
};

enum class FamilyKind { ONB, RIESZ, FRAME, BESSEL_ONLY, RANK_DEFICIENT, OVERCOMPLETE };

std::string_view to_string(FamilyKind kind) noexcept;
/// Case-insensitive; '-' is accepted for '_'. Throws Error(InvalidConfig).
FamilyKind parse_family_kind(std::string_view name);

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t dim = 2;
  std::size_t count = 2;
  FamilyKind kind = FamilyKind::RIESZ;
  double condition_cap = 1e6;

  friend bool operator==(const GenConfig&, const GenConfig&) = default;
};

struct GeneratedFamily {
  GenConfig config;
  std::vector<QVector> vectors;
  std::optional<QMatrix> U;  // set for RIESZ: vectors are the columns of U
};

/// Components drawn in order x0, x1, x2, x3.
Quaternion gen_quaternion(SplitMix64& rng);
QVector gen_vector(SplitMix64& rng, std::size_t n);
/// Filled column by column.
QMatrix gen_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols);

/// Kinds:
///   ONB            orthonormalized random basis, first `count` vectors (count <= dim)
///   RIESZ          columns of a random U with cond(U) <= condition_cap (count == dim)
///   FRAME          a conditioned basis followed by count - dim random vectors (count >= dim)
///   BESSEL_ONLY    count < dim random vectors, so never complete
///   RANK_DEFICIENT random vectors with the first repeated as the last (count >= 2)
///   OVERCOMPLETE   as FRAME with count > dim
///
/// Throws Error(InvalidConfig) for inconsistent sizes and
/// Error(GenerationFailure) if 100 draws miss the conditioning target.
GeneratedFamily gen_family(const GenConfig& config);

}  // namespace qframes

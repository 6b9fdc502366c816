#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qframes/frames.hpp"
#include "qframes/gen.hpp"
#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"
#include "qframes/riesz.hpp"
#include "qframes/tolerances.hpp"

namespace qframes::io {

// JSON formats shared by the library and the command-line tool.
//
//   quaternion  [x0, x1, x2, x3]
//   vector      [quaternion, ...]
//   matrix      [column vector, ...]
//
// Malformed input raises Error(ParseError); columns of the wrong length raise
// Error(DimensionMismatch).

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kFormatVersion = "1";

Json to_json(const Quaternion& q);
Json to_json(const QVector& v);
Json to_json(const QMatrix& a);
Json to_json(const std::vector<QVector>& family);
Json to_json(const Tolerances& tol);
Json to_json(const GenConfig& config);

Quaternion quaternion_from_json(const Json& j);
QVector vector_from_json(const Json& j);
QMatrix matrix_from_json(const Json& j);
std::vector<QVector> family_from_json(const Json& j);

/// Tolerance fields a file or a command line may override.
struct ToleranceOverrides {
  std::optional<double> eq;
  std::optional<double> rank;
  std::optional<double> spec;

  Tolerances apply(Tolerances base) const;
  bool empty() const noexcept { return !eq && !rank && !spec; }
  friend bool operator==(const ToleranceOverrides&, const ToleranceOverrides&) = default;
};

/// On-disk family document:
///
///   {
///     "header": {"version": "1", "n": 3, "tolerances": {...}?, "gen": {...}?},
///     "vectors": [column, ...],
///     "U": [column, ...]?
///   }
struct FamilyFile {
  std::size_t n = 0;
  ToleranceOverrides tolerances;
  std::optional<GenConfig> gen;
  std::vector<QVector> vectors;
  std::optional<QMatrix> U;
};

FamilyFile parse_family(std::string_view text);
std::string serialize_family(const FamilyFile& file);
FamilyFile family_file(const GeneratedFamily& generated);

/// Flat document with every tolerance echoed as tol_eq, tol_rank, tol_spec.
Json report_json(const FrameReport& report);
Json certificate_json(const RieszCertificate& cert);
Json bounds_json(const RieszSequenceBounds& bounds, const Tolerances& tol);
/// Certificate on success, otherwise the failure tags and, when available, the
/// null Gram direction.
Json riesz_check_json(const RieszBasisCheck& check, const Tolerances& tol);

/// Two-space indentation plus a trailing newline.
std::string dump(const Json& j);

}  // namespace qframes::io

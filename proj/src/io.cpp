#include "qframes/io.hpp"

#include <cmath>
#include <string>

#include "qframes/error.hpp"

namespace qframes::io {

namespace {

[[noreturn]] void parse_fail(const std::string& why) { throw Error(ErrorKind::ParseError, why); }

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) parse_fail(std::string(what) + " is not finite");
  return x;
}

const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::optional<double> optional_tolerance(const Json& obj, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  const double x = finite_number(obj.at(key), key);
  if (x <= 0.0) parse_fail(std::string("tolerance '") + key + "' must be positive");
  return x;
}

Json tolerance_overrides_json(const ToleranceOverrides& o) {
  Json j = Json::object();
  if (o.eq) j["eq"] = *o.eq;
  if (o.rank) j["rank"] = *o.rank;
  if (o.spec) j["spec"] = *o.spec;
  return j;
}

GenConfig gen_config_from_json(const Json& j) {
  GenConfig c;
  const Json& seed = member(j, "seed");
  if (!seed.is_number_unsigned()) parse_fail("gen.seed must be a non-negative integer");
  c.seed = seed.get<std::uint64_t>();
  const Json& dim = member(j, "dim");
  const Json& count = member(j, "count");
  if (!dim.is_number_unsigned() || !count.is_number_unsigned()) parse_fail("gen.dim and gen.count must be non-negative integers");
  c.dim = dim.get<std::size_t>();
  c.count = count.get<std::size_t>();
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) parse_fail("gen.kind must be a string");
  try {
    c.kind = parse_family_kind(kind.get<std::string>());
  } catch (const Error& e) {
    parse_fail(e.what());
  }
  c.condition_cap = finite_number(member(j, "condition_cap"), "gen.condition_cap");
  return c;
}

}  // namespace

Json to_json(const Quaternion& q) { return Json::array({q.x0(), q.x1(), q.x2(), q.x3()}); }

Json to_json(const QVector& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(to_json(q));
  return j;
}

Json to_json(const QMatrix& a) { return to_json(a.columns()); }

Json to_json(const std::vector<QVector>& family) {
  Json j = Json::array();
  for (const auto& v : family) j.push_back(to_json(v));
  return j;
}

Json to_json(const Tolerances& tol) { return Json{{"eq", tol.eq}, {"rank", tol.rank}, {"spec", tol.spec}}; }

Json to_json(const GenConfig& c) {
  return Json{{"seed", c.seed},
              {"dim", c.dim},
              {"count", c.count},
              {"kind", std::string(to_string(c.kind))},
              {"condition_cap", c.condition_cap}};
}

Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) parse_fail("a quaternion is an array of 4 numbers");
  return Quaternion(finite_number(j[0], "x0"), finite_number(j[1], "x1"), finite_number(j[2], "x2"),
                    finite_number(j[3], "x3"));
}

QVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_fail("a vector is a non-empty array of quaternions");
  std::vector<Quaternion> entries;
  entries.reserve(j.size());
  for (const auto& q : j) entries.push_back(quaternion_from_json(q));
  return QVector(std::move(entries));
}

std::vector<QVector> family_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_fail("a family is a non-empty array of vectors");
  std::vector<QVector> family;
  family.reserve(j.size());
  for (const auto& v : j) family.push_back(vector_from_json(v));
  return family;
}

QMatrix matrix_from_json(const Json& j) { return QMatrix::from_columns(family_from_json(j)); }

Tolerances ToleranceOverrides::apply(Tolerances base) const {
  if (eq) base.eq = *eq;
  if (rank) base.rank = *rank;
  if (spec) base.spec = *spec;
  return base;
}

FamilyFile parse_family(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("family document must be a JSON object");

  FamilyFile file;
  const Json& header = member(doc, "header");
  const Json& version = member(header, "version");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
    parse_fail("unsupported format version (expected \"1\")");
  }
  const Json& n = member(header, "n");
  if (!n.is_number_unsigned() || n.get<std::size_t>() == 0) parse_fail("header.n must be a positive integer");
  file.n = n.get<std::size_t>();

  if (header.contains("tolerances")) {
    const Json& t = header.at("tolerances");
    if (!t.is_object()) parse_fail("header.tolerances must be an object");
    file.tolerances = {optional_tolerance(t, "eq"), optional_tolerance(t, "rank"), optional_tolerance(t, "spec")};
  }
  if (header.contains("gen")) file.gen = gen_config_from_json(header.at("gen"));

  try {
    file.vectors = family_from_json(member(doc, "vectors"));
    if (doc.contains("U")) {
      const auto columns = family_from_json(doc.at("U"));
      for (const auto& c : columns) {
        if (c.size() != file.n) throw Error(ErrorKind::DimensionMismatch, "U column length differs from n");
      }
      if (columns.size() != file.n) throw Error(ErrorKind::DimensionMismatch, "U must be n x n");
      file.U = QMatrix::from_columns(columns);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidInput) parse_fail(e.what());
    throw;
  }

  for (std::size_t k = 0; k < file.vectors.size(); ++k) {
    if (file.vectors[k].size() != file.n) {
      throw Error(ErrorKind::DimensionMismatch, "vector " + std::to_string(k) + " has length " +
                                                    std::to_string(file.vectors[k].size()) +
                                                    " but header.n is " + std::to_string(file.n));
    }
  }
  return file;
}

std::string serialize_family(const FamilyFile& file) {
  Json header{{"version", std::string(kFormatVersion)}, {"n", file.n}};
  if (!file.tolerances.empty()) header["tolerances"] = tolerance_overrides_json(file.tolerances);
  if (file.gen) header["gen"] = to_json(*file.gen);

  Json doc{{"header", header}, {"vectors", to_json(file.vectors)}};
  if (file.U) doc["U"] = to_json(*file.U);
  return dump(doc);
}

FamilyFile family_file(const GeneratedFamily& generated) {
  FamilyFile file;
  file.n = generated.config.dim;
  file.gen = generated.config;
  file.vectors = generated.vectors;
  file.U = generated.U;
  return file;
}

Json report_json(const FrameReport& r) {
  return Json{{"n", r.n},
              {"m", r.m},
              {"is_bessel", r.is_bessel},
              {"is_frame", r.is_frame},
              {"lower_bound", r.lower_bound},
              {"upper_bound", r.upper_bound},
              {"tight", r.tight},
              {"parseval", r.parseval},
              {"exact", r.exact},
              {"tol_eq", r.tolerances.eq},
              {"tol_rank", r.tolerances.rank},
              {"tol_spec", r.tolerances.spec}};
}

Json certificate_json(const RieszCertificate& c) {
  return Json{{"U", to_json(c.U)},
              {"N", to_json(c.N)},
              {"X", to_json(c.X)},
              {"Y", to_json(c.Y)},
              {"A", c.lower},
              {"B", c.upper},
              {"tolerances", to_json(c.tolerances)}};
}

Json bounds_json(const RieszSequenceBounds& b, const Tolerances& tol) {
  Json j{{"riesz_sequence", b.is_riesz_sequence}, {"A", b.lower}, {"B", b.upper}};
  if (b.null_direction) j["null_direction"] = to_json(*b.null_direction);
  j["tolerances"] = to_json(tol);
  return j;
}

Json riesz_check_json(const RieszBasisCheck& check, const Tolerances& tol) {
  Json j{{"riesz_basis", check.is_riesz_basis()},
         {"complete", check.complete},
         {"gram_direction", check.gram_direction},
         {"operator_direction", check.operator_direction},
         {"gram_A", check.bounds.lower},
         {"gram_B", check.bounds.upper}};
  if (check.certificate) {
    j["certificate"] = certificate_json(*check.certificate);
    return j;
  }
  j["failure"] = check.tag() ? std::string(failure_tag(*check.tag())) : std::string("DIRECTIONS_DISAGREE");
  Json all = Json::array();
  for (auto f : check.failures) all.push_back(std::string(failure_tag(f)));
  j["failures"] = all;
  if (check.bounds.null_direction) j["null_direction"] = to_json(*check.bounds.null_direction);
  j["tolerances"] = to_json(tol);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qframes::io

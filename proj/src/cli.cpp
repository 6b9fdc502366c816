#include "qframes/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qframes/error.hpp"
#include "qframes/frames.hpp"
#include "qframes/gen.hpp"
#include "qframes/io.hpp"
#include "qframes/riesz.hpp"

namespace qframes::cli {

namespace {

using io::Json;

struct ToleranceFlags {
  std::optional<double> eq;
  std::optional<double> rank;
  std::optional<double> spec;

  void attach(CLI::App& cmd) {
    cmd.add_option("--tol-eq", eq, "equality tolerance (default 1e-9)")->check(CLI::PositiveNumber);
    cmd.add_option("--tol-rank", rank, "relative rank tolerance (default 1e-8)")->check(CLI::PositiveNumber);
    cmd.add_option("--tol-spec", spec, "spectral tolerance (default 1e-7)")->check(CLI::PositiveNumber);
  }

  // defaults, then the file header, then the command line
  Tolerances resolve(const io::FamilyFile& file) const {
    return io::ToleranceOverrides{eq, rank, spec}.apply(file.tolerances.apply(Tolerances{}));
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

io::FamilyFile load_family(const std::string& path) { return io::parse_family(read_file(path)); }

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidConfig:
    case ErrorKind::InvalidInput:
    case ErrorKind::EmptyFamily:
      return kParseError;
    case ErrorKind::DimensionMismatch:
      return kDimensionMismatch;
    case ErrorKind::NotRieszBasis:
    case ErrorKind::NotComplete:
    case ErrorKind::LowerBoundZero:
      return kRejected;
    default:
      return kNumericalFailure;
  }
}

int report_error(std::ostream& out, std::ostream& err, const std::string& kind, const std::string& message, int code) {
  err << "qframes: " << message << '\n';
  out << io::dump(Json{{"error", kind}, {"message", message}, {"exit_code", code}});
  return code;
}

int cmd_analyze(const std::string& path, const ToleranceFlags& flags, std::ostream& out) {
  const io::FamilyFile file = load_family(path);
  const Tolerances tol = flags.resolve(file);
  const FrameReport report = analyze(FrameSystem(file.vectors), tol);
  out << io::dump(io::report_json(report));
  return report.is_frame ? kOk : kRejected;
}

int cmd_dual(const std::string& path, const ToleranceFlags& flags, std::ostream& out) {
  const io::FamilyFile file = load_family(path);
  const Tolerances tol = flags.resolve(file);
  const RieszBasisCheck check = is_riesz_basis(file.vectors, tol);
  if (!check.is_riesz_basis()) {
    out << io::dump(io::riesz_check_json(check, tol));
    return kRejected;
  }
  io::FamilyFile dual;
  dual.n = file.n;
  dual.tolerances = {tol.eq, tol.rank, tol.spec};
  dual.vectors = dual_riesz(file.vectors, tol);
  out << io::serialize_family(dual);
  return kOk;
}

int cmd_verify(const std::string& path, bool riesz_basis, const ToleranceFlags& flags, std::ostream& out) {
  const io::FamilyFile file = load_family(path);
  const Tolerances tol = flags.resolve(file);
  if (riesz_basis) {
    const RieszBasisCheck check = is_riesz_basis(file.vectors, tol);
    out << io::dump(io::riesz_check_json(check, tol));
    return check.is_riesz_basis() ? kOk : kRejected;
  }
  const RieszSequenceBounds bounds = riesz_sequence_bounds(file.vectors, tol);
  out << io::dump(io::bounds_json(bounds, tol));
  return bounds.is_riesz_sequence ? kOk : kRejected;
}

int cmd_reconstruct(const std::string& path, const std::string& signal_path, const std::string& dual_path,
                    const ToleranceFlags& flags, std::ostream& out) {
  const io::FamilyFile file = load_family(path);
  const Tolerances tol = flags.resolve(file);
  const io::FamilyFile signals = load_family(signal_path);
  if (signals.n != file.n) {
    throw Error(ErrorKind::DimensionMismatch, "signals live in H^" + std::to_string(signals.n) +
                                                  ", family in H^" + std::to_string(file.n));
  }

  std::vector<QVector> dual;
  if (!dual_path.empty()) {
    io::FamilyFile d = load_family(dual_path);
    if (d.n != file.n) throw Error(ErrorKind::DimensionMismatch, "dual family lives in a different space");
    dual = std::move(d.vectors);
  } else {
    const RieszBasisCheck check = is_riesz_basis(file.vectors, tol);
    if (!check.is_riesz_basis()) {
      out << io::dump(io::riesz_check_json(check, tol));
      return kRejected;
    }
    dual = dual_riesz(file.vectors, tol);
  }

  Json residuals = Json::array();
  double max_x = 0.0, max_y = 0.0;
  for (const auto& u : signals.vectors) {
    const Reconstruction r = reconstruct(file.vectors, dual, u);
    residuals.push_back(Json{{"via_x", r.residual_x}, {"via_y", r.residual_y}});
    max_x = std::max(max_x, r.residual_x);
    max_y = std::max(max_y, r.residual_y);
  }
  out << io::dump(Json{{"n", file.n},
                       {"signals", signals.vectors.size()},
                       {"residuals", residuals},
                       {"max_residual_x", max_x},
                       {"max_residual_y", max_y},
                       {"reconstructed", max_x <= tol.eq && max_y <= tol.eq},
                       {"tolerances", io::to_json(tol)}});
  return kOk;
}

int cmd_gen(GenConfig config, const std::string& kind, const std::string& out_path, std::ostream& out) {
  if (const char* env = std::getenv("QFRAMES_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      config.seed = std::stoull(env, &used, 0);
      if (env[used] != '\0') throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidConfig, std::string("QFRAMES_SEED is not an unsigned integer: ") + env);
    }
  }
  config.kind = parse_family_kind(kind);
  const std::string doc = io::serialize_family(io::family_file(gen_family(config)));
  if (out_path.empty()) {
    out << doc;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file || !(file << doc)) throw Error(ErrorKind::ParseError, "cannot write '" + out_path + "'");
  out << io::dump(Json{{"written", out_path}, {"seed", config.seed}, {"vectors", config.count}});
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"frame bounds, Riesz certificates and duals for families in H^n", "qframes"};
  app.require_subcommand(1);

  ToleranceFlags flags;
  std::string path, signal_path, dual_path, kind = "RIESZ", out_path;
  bool riesz_basis = false;
  GenConfig config;

  auto* analyze_cmd = app.add_subcommand("analyze", "frame bounds and tight/Parseval/exact classification");
  analyze_cmd->add_option("path", path, "family file")->required();
  flags.attach(*analyze_cmd);

  auto* dual_cmd = app.add_subcommand("dual", "dual Riesz basis, written as a family file");
  dual_cmd->add_option("path", path, "family file")->required();
  flags.attach(*dual_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Riesz sequence bounds, or a Riesz basis certificate with --riesz");
  verify_cmd->add_option("path", path, "family file")->required();
  verify_cmd->add_flag("--riesz", riesz_basis, "check for a Riesz basis of H^n");
  flags.attach(*verify_cmd);

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "reconstruct signals through a dual pair");
  reconstruct_cmd->add_option("path", path, "family file")->required();
  reconstruct_cmd->add_option("--signal", signal_path, "family file whose vectors are the signals")->required();
  reconstruct_cmd->add_option("--dual", dual_path, "dual family (computed when omitted)");
  flags.attach(*reconstruct_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "seeded random family");
  gen_cmd->add_option("--dim", config.dim, "ambient dimension n")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--count", config.count, "family size m")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--kind", kind, "ONB | RIESZ | FRAME | BESSEL_ONLY | RANK_DEFICIENT | OVERCOMPLETE");
  gen_cmd->add_option("--seed", config.seed, "PRNG seed (QFRAMES_SEED overrides)");
  gen_cmd->add_option("--cap", config.condition_cap, "condition number cap")->check(CLI::Range(1.0, 1e300));
  gen_cmd->add_option("--out", out_path, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    err << app.help();
    out << io::dump(Json{{"help", true}});
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_error(out, err, "UsageError", e.what(), kParseError);
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(path, flags, out);
    if (dual_cmd->parsed()) return cmd_dual(path, flags, out);
    if (verify_cmd->parsed()) return cmd_verify(path, riesz_basis, flags, out);
    if (reconstruct_cmd->parsed()) return cmd_reconstruct(path, signal_path, dual_path, flags, out);
    return cmd_gen(config, kind, out_path, out);
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    return report_error(out, err, std::string(to_string(e.kind())), e.what(), code);
  }
}

}  // namespace qframes::cli

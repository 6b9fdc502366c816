#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qframes/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qframes");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qframes::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
public:
  Scratch() : dir_(fs::temp_directory_path() / ("qframes_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
  fs::path dir_;
};

const char* kDuplicated = R"({"header": {"version": "1", "n": 2},
  "vectors": [[[1,0,0,0],[0,0,0,0]], [[1,0,0,0],[0,0,0,0]], [[0,0,0,0],[1,0,0,0]]]})";
const char* kLone = R"({"header": {"version": "1", "n": 2}, "vectors": [[[1,0,0,0],[0,0,0,0]]]})";
const char* kDoubled = R"({"header": {"version": "1", "n": 2},
  "vectors": [[[2,0,0,0],[0,0,0,0]], [[0,0,0,0],[2,0,0,0]]]})";
const char* kRagged = R"({"header": {"version": "1", "n": 2}, "vectors": [[[1,0,0,0]]]})";

}  // namespace

TEST_CASE("analyze") {
  Scratch s;
  const Result dup = run({"analyze", s.write("dup.json", kDuplicated)});
  CHECK(dup.code == 0);
  CHECK(dup.doc().at("lower_bound").get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dup.doc().at("upper_bound").get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(dup.doc().at("tol_rank") == 1e-8);

  const Result lone = run({"analyze", s.write("lone.json", kLone)});
  CHECK(lone.code == 3);
  CHECK(lone.doc().at("is_frame") == false);

  const Result bad = run({"analyze", s.write("bad.json", "{not json")});
  CHECK(bad.code == 1);
  CHECK(bad.doc().at("error") == "ParseError");
  CHECK_FALSE(bad.err.empty());

  CHECK(run({"analyze", s.path("missing.json")}).code == 1);
  CHECK(run({"analyze", s.write("ragged.json", kRagged)}).code == 2);
}

TEST_CASE("tolerance flags are echoed") {
  Scratch s;
  const Result r = run({"analyze", s.write("dup.json", kDuplicated), "--tol-spec", "1e-5", "--tol-eq", "1e-10"});
  CHECK(r.doc().at("tol_spec") == 1e-5);
  CHECK(r.doc().at("tol_eq") == 1e-10);
  CHECK(run({"analyze", s.path("dup.json"), "--tol-spec", "-1"}).code == 1);
}

TEST_CASE("dual") {
  Scratch s;
  const Result r = run({"dual", s.write("two.json", kDoubled)});
  CHECK(r.code == 0);
  const json y = r.doc().at("vectors");
  CHECK(y[0][0][0] == 0.5);
  CHECK(y[1][1][0] == 0.5);
  CHECK(y[0][1][0] == 0.0);

  const Result lone = run({"dual", s.write("lone.json", kLone)});
  CHECK(lone.code == 3);
  CHECK(lone.doc().at("failure") == "NOT_COMPLETE");
}

TEST_CASE("gen, verify and reconstruct") {
  Scratch s;
  const std::string family = s.path("riesz.json");
  const Result g = run({"gen", "--dim", "3", "--count", "3", "--kind", "riesz", "--seed", "11", "--out", family});
  REQUIRE(g.code == 0);
  CHECK(g.doc().at("seed") == 11);

  const Result v = run({"verify", family, "--riesz"});
  CHECK(v.code == 0);
  CHECK(v.doc().at("certificate").contains("A"));
  CHECK(v.doc().at("certificate").contains("B"));
  CHECK(run({"verify", family}).doc().at("riesz_sequence") == true);

  run({"gen", "--dim", "3", "--count", "4", "--kind", "frame", "--seed", "3", "--out", s.path("signals.json")});
  const Result r = run({"reconstruct", family, "--signal", s.path("signals.json")});
  CHECK(r.code == 0);
  CHECK(r.doc().at("max_residual_x").get<double>() <= 1e-9);
  CHECK(r.doc().at("max_residual_y").get<double>() <= 1e-9);
  CHECK(r.doc().at("residuals").size() == 4);

  const Result dual = run({"dual", family});
  const std::string dual_path = s.write("dual.json", dual.out);
  const Result given = run({"reconstruct", family, "--signal", s.path("signals.json"), "--dual", dual_path});
  CHECK(given.doc().at("reconstructed") == true);

  run({"gen", "--dim", "2", "--count", "1", "--kind", "onb", "--out", s.path("small.json")});
  CHECK(run({"reconstruct", family, "--signal", s.path("small.json")}).code == 2);

  const Result rank = run({"verify", s.write("dup.json", kDuplicated), "--riesz"});
  CHECK(rank.code == 3);
  CHECK(rank.doc().at("failure") == "LOWER_BOUND_ZERO");
}

TEST_CASE("gen configuration errors") {
  CHECK(run({"gen", "--dim", "2", "--count", "3", "--kind", "onb"}).code == 1);
  CHECK(run({"gen", "--dim", "2", "--count", "2", "--kind", "nonsense"}).code == 1);
  CHECK(run({"gen", "--dim", "2"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
}

TEST_CASE("QFRAMES_SEED overrides --seed") {
  const std::string with_seed = run({"gen", "--dim", "2", "--count", "2", "--seed", "99"}).out;
  ::setenv("QFRAMES_SEED", "99", 1);
  const std::string from_env = run({"gen", "--dim", "2", "--count", "2", "--seed", "5"}).out;
  ::setenv("QFRAMES_SEED", "0x10", 1);
  const Result hex = run({"gen", "--dim", "2", "--count", "2"});
  ::setenv("QFRAMES_SEED", "twelve", 1);
  const Result bad = run({"gen", "--dim", "2", "--count", "2"});
  ::unsetenv("QFRAMES_SEED");
  CHECK(from_env == with_seed);
  CHECK(hex.doc().at("header").at("gen").at("seed") == 16);
  CHECK(bad.code == 1);
}

TEST_CASE("help writes valid JSON to stdout") {
  const Result h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.doc().at("help") == true);
  CHECK(h.err.find("analyze") != std::string::npos);
}

TEST_CASE("the installed tool reports through its exit status") {
  Scratch s;
  const std::string lone = s.write("lone.json", kLone);
  const std::string cmd = std::string(QFRAMES_TOOL_PATH) + " analyze " + lone + " > /dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 3);
}

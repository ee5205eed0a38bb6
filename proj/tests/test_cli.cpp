#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "semint/corpus.hpp"
#include "semint/json_io.hpp"

using nlohmann::json;
using namespace semint;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SEMINT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "semint_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("validate: passing file exits 0") {
  const auto path = write_file("b2.json", save_semiring(*make_bool2()));
  auto r = run("validate " + path);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["passed"] == true);
}

TEST_CASE("validate: axiom failure exits 1 with a witness") {
  // min table corrupted at (2,2); several axioms break, a witness must print
  const std::string text = R"({"order": 3, "zero": 0, "one": 2,
    "add": [[0,1,2],[1,1,2],[2,2,2]],
    "mul": [[0,0,0],[0,1,1],[0,1,1]]})";
  const auto path = write_file("broken.json", text);
  auto r = run("validate " + path);
  CHECK(r.exit_code == 1);
  auto j = json::parse(r.out);
  CHECK(j["passed"] == false);
  REQUIRE(!j["violations"].empty());
  CHECK(j["violations"][0].contains("witness"));
}

TEST_CASE("validate: missing file exits 2") {
  CHECK(run("validate /nonexistent.json").exit_code == 2);
}

TEST_CASE("validate: malformed table exits 2") {
  const auto path = write_file("malformed.json",
                               R"({"order": 2, "zero": 0, "one": 1, "add": [[0,1]], "mul": [[0,0],[0,1]]})");
  CHECK(run("validate " + path).exit_code == 2);
}

TEST_CASE("derivations: counts match the frozen census") {
  auto r = run("derivations builtin:B2");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["count"] == 2);
  CHECK(json::parse(run("derivations builtin:Z2").out)["count"] == 1);
  CHECK(json::parse(run("derivations builtin:trivial").out)["count"] == 1);
  CHECK(json::parse(run("derivations builtin:C3").out)["count"] == 3);
}

TEST_CASE("derivations: enumeration cap exits 3, overridable with --limit") {
  const auto path = write_file("c13.json", save_semiring(*make_chain(13)));
  CHECK(run("derivations " + path).exit_code == 3);
  auto r = run("derivations " + path + " --limit 13");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["count"] == 13);
}

TEST_CASE("integrals: zero derivation on B2") {
  auto r = run("integrals builtin:B2 --derivation 0");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["integral_sets"][0] == json::array({0, 1}));  // I(0) = S
  CHECK(j["integral_sets"][1] == json::array());        // I(1) = empty
  CHECK(j["constants"] == json::array({0, 1}));
}

TEST_CASE("integrals: identity derivation given as an explicit map") {
  auto r = run("integrals builtin:B2 --derivation 0,1");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["integral_sets"][1] == json::array({1}));
  CHECK(j["constants"] == json::array({0}));
  CHECK(j["integrables"] == json::array({0, 1}));
}

TEST_CASE("integrals: a map violating the identities exits 1") {
  CHECK(run("integrals builtin:B2 --derivation 1,1").exit_code == 1);
}

TEST_CASE("integrals: derivation supplied as a serialized file") {
  const auto path = write_file("deriv.json", R"({"semiring": "B2", "map": [0, 1]})");
  auto r = run("integrals builtin:B2 --derivation @" + path);
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out)["integrables"] == json::array({0, 1}));
}

TEST_CASE("integrals: a structurally bad map exits 2") {
  CHECK(run("integrals builtin:B2 --derivation 0,7").exit_code == 2);
}

TEST_CASE("integral-semiring: (B2, id) family") {
  auto r = run("integral-semiring builtin:B2 --derivation 1");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["members"] == json::array({"empty", "[0]", "[1]"}));
  CHECK(j["axioms"]["passed"] == true);
}

TEST_CASE("integrals: canonical derivation on the extension reproduces the set identities") {
  auto r = run("integrals \"builtin:tri2(B2)\" --derivation 0,1,0,1");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["constants"] == json::array({0, 2}));    // diagonal pairs (0,0), (1,0)
  CHECK(j["integrables"] == json::array({0, 1}));  // strictly upper pairs (0,0), (0,1)
  CHECK(j["integral_sets"][1] == json::array({1, 3}));  // I((0,1)) = {(x,1)}
}

TEST_CASE("integral-semiring: the extension's family builds and validates") {
  auto r = run("integral-semiring \"builtin:tri2(B2)\" --derivation 0,1,0,1");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["members"] == json::array({"empty", "[0]", "[1]"}));
  CHECK(j["axioms"]["passed"] == true);
}

TEST_CASE("integral-semiring: closure violation exits 4 with the witness pair") {
  auto r = run("integral-semiring \"builtin:tri2(Z2)\" --derivation 0,3,0,3");
  CHECK(r.exit_code == 4);
  auto j = json::parse(r.out);
  CHECK(j["closure"]["holds"] == false);
  CHECK(j["closure"]["witness"] == json::array({3, 3}));
}

TEST_CASE("matrix: emits a loadable extension that round-trips") {
  auto r = run("matrix builtin:Z2");
  REQUIRE(r.exit_code == 0);
  FiniteSemiring ext = parse_semiring(r.out);
  CHECK(ext.order() == 4);
  CHECK(ext.name() == "tri2(Z2)");
  CHECK(validate_semiring(ext).passed);
}

TEST_CASE("builtin: emits loadable JSON; unknown name exits 2") {
  auto r = run("builtin B2");
  REQUIRE(r.exit_code == 0);
  CHECK(parse_semiring(r.out) == *make_bool2());
  CHECK(run("builtin nonsense").exit_code == 2);
}

TEST_CASE("poly int: offending index reported with exit 5") {
  auto r = run("poly int --char 3 \"0 0 1\"");
  CHECK(r.exit_code == 5);
  auto j = json::parse(r.out);
  CHECK(j["error"] == "not-integrable");
  CHECK(j["index"] == 2);
}

TEST_CASE("poly int: antiderivative of x over GF(3)") {
  auto r = run("poly int --char 3 \"0 1\"");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["particular"] == "0 0 2");
  CHECK(j["constant_space"] == "span{1, x^3, x^6, ...}");
}

TEST_CASE("poly closure: verdicts per characteristic") {
  CHECK(run("poly closure --char 0").exit_code == 0);
  CHECK(run("poly closure --char 2").exit_code == 0);
  auto r = run("poly closure --char 3");
  CHECK(r.exit_code == 1);
  auto j = json::parse(r.out);
  CHECK(j["holds"] == false);
  CHECK(j["witness"]["product"] == "0 0 1");  // x^2
}

TEST_CASE("poly diff") {
  auto r = run("poly diff --char 0 \"1 2 3\"");
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out)["derivative"] == "2 6");
}

TEST_CASE("corpus: all laws green, exit 0, deterministic output") {
  auto first = run("corpus");
  CHECK(first.exit_code == 0);
  auto j = json::parse(first.out);
  CHECK(j["summary"]["all_passed"] == true);
  CHECK(j["summary"]["uncovered_laws"].empty());
  auto second = run("corpus");
  CHECK(second.out == first.out);  // byte-identical
}

TEST_CASE("SEMIRING_CAP env var lowers the order cap") {
  const std::string cmd = "SEMIRING_CAP=2 " + std::string(SEMINT_CLI_PATH) +
                          " validate builtin:C3 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[256];
  while (fread(buf, 1, sizeof buf, pipe) > 0) {
  }
  CHECK(WEXITSTATUS(pclose(pipe)) == 3);
}

TEST_CASE("unknown flags exit 2") {
  CHECK(run("validate builtin:B2 --frobnicate").exit_code == 2);
}

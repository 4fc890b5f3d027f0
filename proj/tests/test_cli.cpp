#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LFIKIT_TOOL_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("check: exit codes and verdicts") {
  RunResult valid = run("check --logic L:1,0 --goal \"o o o p\"");
  CHECK(valid.exit_code == 0);
  CHECK(valid.out.find("Valid") != std::string::npos);

  RunResult refuted = run("check --logic mbCciw --goal \"o o p\"");
  CHECK(refuted.exit_code == 1);
  CHECK(refuted.out.find("Refuted") != std::string::npos);

  RunResult premise = run("check --logic LFI3 --premises \"p & ~p\" --goal \"o o p\"");
  CHECK(premise.exit_code == 0);

  RunResult usage = run("check --logic nosuch --goal p");
  CHECK(usage.exit_code == 2);
  RunResult bad_formula = run("check --logic LFI3 --goal \"p &\"");
  CHECK(bad_formula.exit_code == 2);
  RunResult hilbert_only = run("check --logic mbC --goal p");
  CHECK(hilbert_only.exit_code == 2);
  RunResult unavailable = run("check --logic mbCciw --goal p --semantics matrix");
  CHECK(unavailable.exit_code == 2);
}

TEST_CASE("check --json matches the countermodel schema") {
  RunResult r = run("check --logic L:1,0 --semantics nmatrix --goal \"o o p\" --json");
  CHECK(r.exit_code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "refuted");
  REQUIRE(j.contains("assignment"));
  CHECK(j["assignment"]["p"] == "t");
  CHECK(j["assignment"]["o o p"] == "F");

  RunResult v = run("check --logic L:1,0 --goal \"o o o p\" --json");
  auto jv = nlohmann::json::parse(v.out);
  CHECK(jv["status"] == "valid");
  CHECK(!jv.contains("assignment"));
}

TEST_CASE("tables: filters and json output") {
  RunResult circ = run("tables --logic LFI3 --connective circ");
  CHECK(circ.exit_code == 0);
  CHECK(circ.out.find("t -> {b}") != std::string::npos);
  CHECK(circ.out.find("b -> {F}") != std::string::npos);

  RunResult j = run("tables --logic mbCciw --connective circ --json");
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["domain"] == nlohmann::json({"T", "t", "F"}));
  CHECK(parsed["tables"]["circ"]["T"] == nlohmann::json({"T", "t"}));
  CHECK(parsed["tables"]["circ"]["t"] == nlohmann::json({"F"}));

  CHECK(run("tables --logic mbC").exit_code == 2);
  CHECK(run("tables --logic LFI3 --connective nope").exit_code == 2);
}

TEST_CASE("axioms lists the schema names") {
  RunResult r = run("axioms --logic LFI3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("(bc1)") != std::string::npos);
  CHECK(r.out.find("(ciw)") != std::string::npos);
  CHECK(r.out.find("(cc^1)") != std::string::npos);
  CHECK(r.out.find("A4") != std::string::npos);

  RunResult j = run("axioms --logic L:2,0 --json");
  auto parsed = nlohmann::json::parse(j.out);
  bool has_cc2 = false;
  for (const auto& ax : parsed["axioms"]) has_cc2 = has_cc2 || ax["id"] == "cc^2";
  CHECK(has_cc2);
  CHECK(parsed["rule"] == "MP");
}

TEST_CASE("synth verifies a table file") {
  std::string table = std::string(LFIKIT_TEST_DATA_DIR) + "/g3.tt";
  RunResult r = run("synth --table " + table + " --json");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["verified"] == true);
  CHECK(parsed["width"] == 3);

  RunResult min = run("synth --table " + table + " --minimize");
  CHECK(min.exit_code == 0);
  CHECK(min.out.find("verified") != std::string::npos);

  CHECK(run("synth --table /nonexistent.tt").exit_code == 2);
}

TEST_CASE("prove checks bundled proof files") {
  std::string proof = std::string(LFIKIT_TEST_DATA_DIR) + "/proofs/explosion.json";
  RunResult r = run("prove --file " + proof);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ok") != std::string::npos);

  RunResult j = run("prove --file " + proof + " --json");
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["ok"] == true);
  CHECK(parsed["conclusion"] == "q");
}

TEST_CASE("meta: suites succeed and unknown suites are usage errors") {
  RunResult props = run("meta --suite lfi3-properties");
  CHECK(props.exit_code == 0);
  CHECK(props.out.find("6/6") != std::string::npos);

  RunResult fp = run("meta --suite fixed-point --n 0 --m 3 --json");
  CHECK(fp.exit_code == 0);
  auto parsed = nlohmann::json::parse(fp.out);
  CHECK(parsed[0]["status"] == "verified");

  CHECK(run("meta --suite nonsense").exit_code == 2);
  CHECK(run("").exit_code == 2);
}

TEST_CASE("pretty rendering uses logic symbols") {
  RunResult r = run("check --logic L:1,0 --semantics nmatrix --goal \"o o p\" --pretty");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("∘") != std::string::npos);
}

// Exercises the installed binary end to end through a shell, covering the
// exit-status contract: 0 pass, 1 collision/bound violation, 2 usage or
// parse error, 3 instance too large.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

const std::string cli = BKSEQ_CLI_PATH;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen(("( " + command + " ) 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_doc(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("bkseq_" + name);
  std::ofstream out(path);
  out << text;
  return path.string();
}

}  // namespace

TEST_CASE("generate emits the documented JSON document") {
  const auto result = run(cli + " generate pow2 --n 2 --k 2");
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "{\"construction\":\"pow2\",\"n\":2,\"k\":2,\"r\":6,"
        "\"modulus\":\"16\",\"elements\":[\"3\",\"1\"]}\n");
}

TEST_CASE("generate supports the text format and all constructions") {
  CHECK(run(cli + " generate pow2 --n 2 --k 2 --format text").out.find(
            "elements: 3 1") != std::string::npos);
  CHECK(run(cli + " generate bose_chowla --q 3 --k 2").out.find(
            "\"elements\":[\"1\",\"6\",\"7\"]") != std::string::npos);
  CHECK(run(cli + " generate pow3 --n 2 --k 2").out.find(
            "\"elements\":[\"1\",\"5\"]") != std::string::npos);
  CHECK(run(cli + " generate geometric --n 4 --k 2").out.find(
            "\"modulus\":\"32\"") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run(cli).exit_code == 2);                               // no subcommand
  CHECK(run(cli + " generate pow2 --k 2").exit_code == 2);      // missing --n
  CHECK(run(cli + " generate bose_chowla --k 2").exit_code == 2);  // missing --q
  CHECK(run(cli + " generate singer --n 3 --k 2").exit_code == 2);
  CHECK(run(cli + " generate pow2 --n 2").exit_code == 2);      // missing --k
  CHECK(run(cli + " generate geometric --n 2 --k 1").exit_code == 2);
  CHECK(run(cli + " verify --file /nonexistent.json").exit_code == 2);
  CHECK(run("printf '%s' 'not json' | " + cli + " verify").exit_code == 2);
  CHECK(run(cli + " selftest --max-n 0").exit_code == 2);
  CHECK(run(cli + " --help").exit_code == 0);
}

TEST_CASE("verify reads documents from a file or stdin") {
  const std::string good =
      write_doc("good.json", R"({"k":2,"modulus":"16","elements":["3","1"]})");
  const auto pass = run(cli + " verify --file " + good);
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("\"ok\":true") != std::string::npos);

  const auto from_stdin = run(cli + " verify < " + good);
  CHECK(from_stdin.exit_code == 0);

  const std::string bad =
      write_doc("bad.json", R"({"k":2,"modulus":"10","elements":["0","1","2"]})");
  const auto fail = run(cli + " verify --file " + bad + " --format text");
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("collision") != std::string::npos);
  CHECK(fail.out.find("{0,2} vs {1,1}") != std::string::npos);
}

TEST_CASE("generate | verify compose through a pipe") {
  const auto ok = run(cli + " generate pow2 --n 6 --k 2 | " + cli + " verify");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"ok\":true") != std::string::npos);

  const auto too_large =
      run(cli + " generate geometric --n 4 --k 2 | " + cli + " verify --limit 9");
  CHECK(too_large.exit_code == 3);

  const auto at_limit =
      run(cli + " generate geometric --n 4 --k 2 | " + cli + " verify --limit 10");
  CHECK(at_limit.exit_code == 0);
}

TEST_CASE("density reports bounds and flags violations") {
  const auto pow2 = run(cli + " generate pow2 --n 5 --k 2 | " + cli + " density");
  CHECK(pow2.exit_code == 0);
  CHECK(pow2.out.find("\"upper_bound\":\"169\"") != std::string::npos);
  CHECK(pow2.out.find("\"lower_ok\":true") != std::string::npos);

  const std::string thin =
      write_doc("thin.json", R"({"k":2,"modulus":"3","elements":["0","1","2"]})");
  CHECK(run(cli + " density --file " + thin).exit_code == 1);
}

TEST_CASE("selftest sweeps the grid and reports per-case status") {
  const auto result = run(cli + " selftest --max-n 4 --max-k 2");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("pow2 n=4 k=2") != std::string::npos);
  CHECK(result.out.find("bose_chowla q=3 k=2") != std::string::npos);
  CHECK(result.out.find("selftest: all pass") != std::string::npos);
}

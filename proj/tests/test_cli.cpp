#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// DCX_CLI_PATH is injected by the build and points at the dcx binary.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + DCX_CLI_PATH + (" " + args) + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Scratch directory holding the JSON fixtures, created once per process.
const std::filesystem::path& scratch() {
  static const std::filesystem::path dir = [] {
    std::filesystem::path d =
        std::filesystem::temp_directory_path() / ("dcx_cli_" + std::to_string(getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string fixture(const std::string& name, const std::string& content) {
  std::filesystem::path p = scratch() / name;
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST_CASE("check-unimodular reports the built-in counts") {
  std::string e5 = fixture("e5.json", R"({"name": "E5", "ambient": 5})");
  RunResult r = run("check-unimodular " + e5);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "valid, 20 roots (21 with zero), dim 5\n");

  std::string bad = fixture("bad_sys.json", R"({"ambient": 2, "roots": [["1","1"],["1","-1"]]})");
  r = run("check-unimodular " + bad);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("non-pure") != std::string::npos);

  r = run("--json check-unimodular " + bad);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("\"valid\": false") != std::string::npos);
  CHECK(r.output.find("\"violating\"") != std::string::npos);
}

TEST_CASE("choquet evaluates the capped-cardinality example") {
  std::string b = fixture("b_cap2.json",
                          R"({"ground": ["1","2","3"], "values": {"{}": "0",
      "{1}": "1", "{2}": "1", "{3}": "1", "{1,2}": "2", "{1,3}": "2",
      "{2,3}": "2", "{1,2,3}": "2"}})");
  std::string p = fixture("p110.json", R"(["1","1","0"])");
  RunResult r = run("choquet " + b + " " + p);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2\n");
}

TEST_CASE("dc-check rejects the crossing-diagonals pair with a witness") {
  std::string x = fixture("x.json", R"({"ambient": 2, "points": [["0","0"],["1","1"]]})");
  std::string y = fixture("y.json", R"({"ambient": 2, "points": [["0","1"],["1","0"]]})");
  RunResult r = run("dc-check " + x + " " + y);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("(1/2, 1/2)") != std::string::npos);

  r = run("--json dc-check " + x + " " + y);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("\"witness\"") != std::string::npos);
  CHECK(r.output.find("\"1/2\"") != std::string::npos);

  // A set checked against itself satisfies everything.
  r = run("dc-check " + x + " " + x);
  CHECK(r.exit_code == 0);
}

TEST_CASE("maximal distinguishes full systems from extendable ones") {
  std::string a2 = fixture("a2.json", R"({"name": "A_n", "ambient": 2})");
  CHECK(run("maximal " + a2).exit_code == 0);

  std::string thin = fixture("thin.json", R"({"ambient": 2, "roots": [["1","0"]]})");
  RunResult r = run("maximal " + thin);
  CHECK(r.exit_code == 1);
  CHECK(r.output == "not maximal\n");
}

TEST_CASE("emitted polytope JSON feeds back into consuming commands") {
  std::string a2 = fixture("a2.json", R"({"name": "A_n", "ambient": 2})");
  RunResult star = run("--json star " + a2);
  CHECK(star.exit_code == 0);
  std::string star_path = fixture("star.json", star.output);

  RunResult pts = run("lattice-points " + star_path);
  CHECK(pts.exit_code == 0);
  CHECK(pts.output.find("7 points") != std::string::npos);

  RunResult sum = run("--json sum " + star_path + " " + star_path);
  CHECK(sum.exit_code == 0);
  std::string sum_path = fixture("sum.json", sum.output);
  RunResult meet = run("intersect " + star_path + " " + sum_path);
  CHECK(meet.exit_code == 0);
  CHECK(meet.output.find("6 vertices") != std::string::npos);  // the star itself
}

TEST_CASE("gpm builds the box of a cardinality/zero bound pair") {
  std::string pair = fixture("pair.json",
                             R"({"b": {"ground":["1","2"], "values":
      {"{}":"0","{1}":"1","{2}":"1","{1,2}":"2"}},
      "a": {"ground":["1","2"], "values":
      {"{}":"0","{1}":"0","{2}":"0","{1,2}":"0"}}})");
  RunResult r = run("gpm " + pair);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("4 vertices") != std::string::npos);
}

TEST_CASE("verify is reproducible and fails loudly on unknown names") {
  RunResult a = run("verify --suite dicing --seed 5");
  RunResult b = run("verify --suite dicing --seed 5");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("suite dicing: PASS") != std::string::npos);

  CHECK(run("verify --suite no-such-suite").exit_code == 2);
}

TEST_CASE("DCX_ENUM_BUDGET caps brute-force scans") {
  std::string a2 = fixture("a2.json", R"({"name": "A_n", "ambient": 2})");
  std::string star = fixture("star2.json", run("--json star " + a2).output);
  CHECK(run("lattice-points " + star).exit_code == 0);

  RunResult capped = run("lattice-points " + star, "DCX_ENUM_BUDGET=1");
  CHECK(capped.exit_code == 2);
  CHECK(capped.output.find("enumeration budget") != std::string::npos);
}

TEST_CASE("usage and parse errors exit with code 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("maximal").exit_code == 2);
  std::string a2 = fixture("a2.json", R"({"name": "A_n", "ambient": 2})");
  CHECK(run("--bogus maximal " + a2).exit_code == 2);
  CHECK(run("maximal /no/such/file.json").exit_code == 2);

  std::string broken = fixture("broken.json", "{\"ambient\": }");
  RunResult r = run("flats " + broken);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("parse error at line 1, column 13") != std::string::npos);
}

// End-to-end runs of the command line tool. The binary path arrives in
// FORMDIV_BIN; every case checks the exit code and scrapes stdout.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("FORMDIV_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classes: table and json output") {
  RunResult r = run("classes --n 5");
  CHECK(r.code == 0);
  CHECK(has(r.out, "admissible mod 20: 1 3 7 9"));
  CHECK(has(r.out, "forbidden  mod 20: 11 13 17 19"));
  CHECK(has(r.out, "not reducible"));

  r = run("classes --n 3");
  CHECK(r.code == 0);
  CHECK(has(r.out, "reduced mod 6: 1"));

  r = run("classes --n 1 --sign minus");
  CHECK(r.code == 0);
  CHECK(has(r.out, "degenerate"));

  r = run("classes --n 5 --format json");
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("admissible") == json({1, 3, 7, 9}));
  CHECK(doc.at("count") == 4);
}

TEST_CASE("represent: witness lines and the none case") {
  RunResult r = run("represent --value 29 --n 5");
  CHECK(r.code == 0);
  CHECK(r.out == "29 = 3^2 + 5*2^2\n");

  r = run("represent --value 3 --n 1");
  CHECK(r.code == 0);
  CHECK(r.out == "none\n");

  r = run("represent --value 7 --n 2 --sign minus");
  CHECK(r.code == 0);
  CHECK(r.out == "7 = 3^2 - 2*1^2\n");

  r = run("represent --value 29 --p 1 --q 5 --format json");
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("witness").at("a") == 3);
  CHECK(doc.at("witness").at("b") == 2);
}

TEST_CASE("verify: single records and the full catalog") {
  RunResult r = run("verify --record th4");
  CHECK(r.code == 0);
  CHECK(has(r.out, "verified"));

  r = run("verify --record th22");
  CHECK(r.code == 0);
  CHECK(has(r.out, "verified-with-errata"));
  CHECK(has(r.out, "\"8m+31\" -> \"68m+31\""));

  r = run("verify --record th22 --as-printed");
  CHECK(r.code == 1);
  CHECK(has(r.out, "failed"));

  r = run("verify --all --jobs 4");
  CHECK(r.code == 0);
  CHECK(has(r.out, "0 failed"));
  CHECK(has(r.out, "86 records"));

  r = run("verify --all --jobs 4 --format json");
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("summary").at("records") == 86);
  CHECK(doc.at("summary").at("failed") == 0);
  CHECK(doc.at("records").size() == 86);
}

TEST_CASE("errata: the catalog's corrections, printed and corrected") {
  RunResult r = run("errata");
  CHECK(r.code == 0);
  CHECK(has(r.out, "th7"));
  CHECK(has(r.out, "\"2m+1\" -> \"20m+1\""));
  CHECK(has(r.out, "\"28mn+-8(m-n)\" -> \"28mn+-13(m-n)\""));
  CHECK(has(r.out, "19 errata"));
}

TEST_CASE("scan: clean family, square-bearing family, corollary alias") {
  RunResult r = run("scan --family '4mn-(m+n)' --bound 100");
  CHECK(r.code == 0);
  CHECK(has(r.out, "clean"));

  r = run("scan --family '28mn+8(m-n)' --bound 50");
  CHECK(r.code == 1);
  CHECK(has(r.out, "m=3 n=1"));
  CHECK(has(r.out, "value=100=10^2"));

  r = run("scan --corollary '4abc-b-c' --bound 20");
  CHECK(r.code == 0);
  CHECK(has(r.out, "clean"));
}

TEST_CASE("tables: rows for both signs") {
  RunResult r = run("tables --prime-max 7");
  CHECK(r.code == 0);
  CHECK(has(r.out, "P=3"));
  CHECK(has(r.out, "+5: 1 4"));

  r = run("tables --sign minus --prime-max 13");
  CHECK(r.code == 0);
  CHECK(has(r.out, "+13: 1 3 4 9 10 12"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("classes").code == 2);
  CHECK(run("classes --n 0").code == 2);
  CHECK(run("represent --value 29 --n 5 --p 1 --q 5").code == 2);
  CHECK(run("verify --record nope").code == 2);
  CHECK(run("scan --family garbage").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("--version prints something and exits cleanly") {
  RunResult r = run("--version");
  CHECK(r.code == 0);
  CHECK(r.out.size() > 0);
}

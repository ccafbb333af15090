#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gkm/cli.hpp"

using namespace gkm;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("star-condition prints a bare boolean") {
  auto r = run({"star-condition", "--h", "2,3,3"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = run({"star-condition", "--h", "3,3,4,4"});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");
}

TEST_CASE("betti vectors are JSON arrays") {
  const auto r = run({"cohomology", "betti", "--h", "3,3,3"});
  CHECK(r.code == 0);
  CHECK(r.out == "[1,2,2,1]\n");
}

TEST_CASE("count-only enumeration") {
  const auto r = run({"aut", "enumerate", "--h", "3,3,4,4", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "24\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"star-condition", "--h", "3,2,3"}).code == 2);
  CHECK(run({"star-condition", "--h", "oops"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"graph", "validate", "--in", "/nonexistent/g.json"}).code == 2);
  CHECK(run({"aut", "star", "--h", "2,3,3", "--max-degree", "1"}).code == 2);
  CHECK(run({"cohomology", "betti", "--h", "1,3,3"}).code == 2);
}

TEST_CASE("guards cap the sweep size") {
  CHECK(run({"aut", "enumerate", "--h", "2,3,4,5,6,6", "--count-only"}).code == 2);
  CHECK(run({"cohomology", "betti", "--h", "2,3,4,5,6,6"}).code == 2);
}

TEST_CASE("build then validate round trips through a file") {
  const std::string path = "cli_roundtrip_tmp.json";
  auto r = run({"graph", "build", "--h", "2,3,3", "--out", path});
  REQUIRE(r.code == 0);
  r = run({"graph", "validate", "--in", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"valid\": true") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("output is byte-deterministic") {
  const std::vector<std::string> args{"aut", "enumerate", "--h", "2,3,3"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("equivariant basis table on stdout") {
  const auto r = run({"cohomology", "equivariant", "--h", "2,3,3", "--degree", "2",
                      "--lattice", "t"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"123\"") != std::string::npos);
  // Odd cohomological degrees are empty.
  const auto odd = run({"cohomology", "equivariant", "--h", "2,3,3", "--degree", "3",
                        "--lattice", "t"});
  CHECK(odd.code == 0);
  CHECK(odd.out == "[]\n");
}

TEST_CASE("unipotent sweep emits one certificate per pair") {
  const auto r = run({"unipotent", "sweep", "--n", "3"});
  CHECK(r.code == 0);
  // 4 functions below the full flag, 6 ordered pairs each.
  std::size_t count = 0, pos = 0;
  while ((pos = r.out.find("\"witness\"", pos)) != std::string::npos) {
    ++count;
    ++pos;
  }
  CHECK(count == 24);
}

TEST_CASE("verification subcommand reports per-criterion lines") {
  const auto r = run({"verify", "all", "--n", "2"});
  CHECK(r.code == 0);
  std::size_t lines = 0, pos = 0;
  while ((pos = r.out.find("criterion ", pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == 9);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "dieu/cli.hpp"
#include "dieu/json_io.hpp"

using dieu::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json parsed() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "dieu");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = dieu::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("construct then invariants round trip") {
  auto c = run({"--f", "2", "--e", "2", "construct", "--family", "slope", "--a", "2"});
  REQUIRE(c.code == 0);
  CHECK(c.parsed()["module"]["tower"]["N"] == 12);

  auto r = run({"invariants", "--module", "-"}, c.out);
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  // a = g/2 is the supersingular end of the slope family
  CHECK(j["newton"]["index"] == "2");
  CHECK(j["newton"]["fast_agrees"] == true);
  CHECK(j["flags"]["supersingular"] == true);

  // the bare module is accepted as well as the envelope
  auto bare = run({"invariants", "--module", "-"}, c.parsed()["module"].dump());
  CHECK(bare.out == r.out);
}

TEST_CASE("normal form options") {
  auto c = run({"--f", "2", "--e", "2", "construct", "--family", "normal", "--tau", "0,1", "--ord", "1,-1"});
  REQUIRE(c.code == 0);
  auto r = run({"invariants", "--module", "-"}, c.out);
  REQUIRE(r.code == 0);
  CHECK(r.parsed()["a_index"]["t"] == 2);
  CHECK(r.parsed()["a_index"]["tau"] == json::array({0, 1}));

  auto unit = run({"--f", "2", "construct", "--family", "normal", "--tau", "0", "--ord", "0"});
  CHECK(unit.code == 1);
  CHECK(unit.parsed()["error"] == "invalid_argument");
  auto mismatch = run({"--f", "2", "construct", "--family", "normal", "--tau", "0,1", "--ord", "1"});
  CHECK(mismatch.code == 1);
}

TEST_CASE("malformed module input gives error JSON") {
  auto r = run({"invariants", "--module", "-"}, "{\"tower\":");
  CHECK(r.code == 1);
  CHECK(r.parsed()["error"] == "parse");

  r = run({"invariants", "--module", "-"}, R"({"tower": {"p": 3, "f": 1, "e": 1, "N": 4}, "matrices": []})");
  CHECK(r.code == 1);
  CHECK(r.parsed()["error"] == "parse");

  r = run({"invariants", "--module", "/nonexistent/module.json"});
  CHECK(r.code == 1);
  CHECK(r.parsed()["error"] == "parse");

  // coefficient outside [0, p^N)
  r = run({"invariants", "--module", "-"},
          R"({"tower": {"p": 3, "f": 1, "e": 1, "N": 4}, "matrices": [[[[[81]],[[0]]],[[[0]],[[3]]]]]})");
  CHECK(r.code == 1);
  CHECK(r.parsed()["error"] == "parse");
}

TEST_CASE("usage errors exit with 2 and help with 0") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"construct", "--family", "bogus"}).code == 2);
  CHECK(run({"--p", "x", "poset"}).code == 2);
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("sample-deform") != std::string::npos);
}

TEST_CASE("poset in both formats") {
  auto j = run({"--e", "2", "--f", "2", "poset"});
  REQUIRE(j.code == 0);
  CHECK(j.parsed()["nodes"].size() == 9);
  auto d = run({"--e", "2", "--f", "2", "poset", "--format", "dot"});
  REQUIRE(d.code == 0);
  CHECK(d.out.rfind("digraph", 0) == 0);
}

TEST_CASE("hecke report") {
  auto r = run({"hecke", "--p", "3", "--full-grassmannian", "--threads", "2"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["counts"]["chart"] == 33);
  CHECK(j["counts"]["expected"] == 33);
  CHECK(j["full_grassmannian"]["stable_planes"] == 37);
  CHECK(j["full_grassmannian"]["off_chart"].size() == 4);
  // global flags work after the subcommand and thread count does not change output
  auto again = run({"hecke", "--full-grassmannian", "--p", "3", "--threads", "1"});
  CHECK(again.out == r.out);

  auto even = run({"hecke", "--p", "2"});
  CHECK(even.code == 1);
  CHECK(even.parsed()["error"] == "invalid_argument");
}

TEST_CASE("sample-deform is deterministic in the seed") {
  const std::vector<std::string> args{"--f", "2", "--e", "2", "--ext", "4", "sample-deform", "--target", "0,1", "--trials", "10"};
  auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const json j = a.parsed();
  int total = 0;
  for (const auto& [k, v] : j["slope_histogram"].items()) total += v.get<int>();
  CHECK(total == 10);
  // target (0,1) is spaced with |a| = 1: its generic point has index 1
  CHECK(j["slope_histogram"].contains("1"));

  CHECK(run({"--f", "2", "sample-deform", "--target", "0"}).code == 1);
}

TEST_CASE("random construction follows the seed") {
  auto a = run({"--seed", "7", "--f", "2", "construct", "--family", "random"});
  auto b = run({"--f", "2", "construct", "--family", "random", "--seed", "7"});
  auto c = run({"--seed", "8", "--f", "2", "construct", "--family", "random"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}

TEST_CASE("verify exit codes") {
  auto ok = run({"verify", "--suite", "hecke", "--p", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.parsed()["passed"] == true);
  auto bad = run({"verify", "--suite", "nope"});
  CHECK(bad.code == 1);
  CHECK(bad.parsed()["error"] == "unknown_suite");
}

TEST_CASE("installed binary behaves like the library entry point") {
  const char* tool = std::getenv("DIEU_TOOL");
  if (!tool) return;
  const std::string cmd = std::string(tool) + " --e 2 --f 1 poset";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  CHECK(pclose(pipe) == 0);
  CHECK(text == run({"--e", "2", "--f", "1", "poset"}).out);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixture.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace hocx;
using namespace hocx::cli;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(HOCX_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(HOCX_FIXTURES) + "/" + name + ".json"; }

std::vector<std::string> failed_names(const json& j) {
  std::vector<std::string> out;
  for (const json& r : j.at("reports"))
    for (const json& it : r.at("items"))
      if (it.at("status") == "fail") out.push_back(it.at("name").get<std::string>());
  return out;
}

std::vector<std::size_t> dims(const json& engine) {
  std::vector<std::size_t> out;
  for (const json& d : engine.at("degrees")) out.push_back(d.at("dim").get<std::size_t>());
  return out;
}

}  // namespace

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_text("{\"kind\": \"groupoid\",\n \"groupoid\": [1 2]}");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.where.rfind("line 2, column ", 0) == 0);
  }
}

TEST_CASE("schema errors carry a pointer") {
  json doc = parse_text(R"({"kind": "groupoid", "groupoid": {"builtin": "pair", "k": -1}})");
  try {
    load_groupoid(doc.at("groupoid"), "/groupoid");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.where == "/groupoid/k");
  }
  CHECK_THROWS_AS(kind_of(parse_text(R"({"kind": "monoid"})")), ParseError);
  CHECK_THROWS_AS(load_group(json("Z/0"), "/g"), UnknownBuiltin);
  CHECK_THROWS_AS(load_coalgebra(parse_text(R"({"dim": 1, "delta": [[0, 0, 0, "x"]], "eps": ["1"]})"), ""),
                  ParseError);
}

TEST_CASE("builtins and explicit tables agree") {
  FiniteGroupoid table = load_groupoid(read_file(fixture("two_objects")).at("groupoid"), "/groupoid");
  CHECK(check_groupoid(table).ok());
  FiniteGroupoid pair = load_groupoid(parse_text(R"({"builtin": "pair", "k": 2})"), "");
  CyclicObject a = nerve_cyclic_module(table, identity_theta(table), 3);
  CyclicObject b = nerve_cyclic_module(pair, identity_theta(pair), 3);
  CHECK(a.dims == b.dims);
  CHECK(lambda_hc(a, 2).dims == lambda_hc(b, 2).dims);

  Coalgebra c = load_coalgebra(read_file(fixture("explicit_coalgebra")).at("coalgebra"), "");
  CHECK(c == Coalgebra::grouplike(2));
  CHECK(load_coalgebra(json("path"), "") == Coalgebra::path());
}

TEST_CASE("rationals are p/q strings") {
  // Delta e = 1/2 e (x) e is counital exactly when eps(e) = 2
  Coalgebra c = load_coalgebra(parse_text(R"({"dim": 1, "delta": [[0, 0, 0, "2/4"]], "eps": [2]})"), "");
  CHECK(c.epsilon(0) == Rational(2));
  CHECK(check_coalgebra(c).ok());
  Coalgebra d = load_coalgebra(parse_text(R"({"dim": 1, "delta": [[0, 0, 0, "2/4"]], "eps": ["1"]})"), "");
  CHECK_FALSE(check_coalgebra(d).ok());
}

TEST_CASE("check exit codes") {
  for (const char* ok : {"pair2", "trivial", "z2_id", "two_objects", "path_coalgebra", "coenveloping_grouplike2",
                         "sayd_theta_z3", "pair2_self", "z2_hopf", "h4_hopf", "z2_explicit_action"}) {
    CAPTURE(ok);
    CHECK(run("check " + fixture(ok)).code == 0);
  }
  for (const char* bad : {"broken_comp", "s3_noncentral", "sayd_doubled", "pair2_corrupt_nu"}) {
    CAPTURE(bad);
    CHECK(run("check " + fixture(bad)).code == 1);
  }
  CHECK(run("check " + fixture("bad_syntax")).code == 2);
  CHECK(run("check " + fixture("unknown_builtin")).code == 2);
  CHECK(run("check /nonexistent.json").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("hc on Z/2 with theta = id") {
  Run r = run("hc " + fixture("z2_id") + " --max-degree 3 --format json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  json engines = j.at("homology").at(0).at("engines");
  REQUIRE(engines.size() == 2);
  CHECK(dims(engines[0]) == std::vector<std::size_t>{1, 0, 1, 0});
  CHECK(dims(engines[1]) == dims(engines[0]));
  // one engine only
  json l = json::parse(run("hc " + fixture("z2_id") + " --max-degree 1 --method lambda --format json").out);
  CHECK(l.at("homology").at(0).at("engines").size() == 1);
}

TEST_CASE("hc on the Hopf self-coextension matches its dual side") {
  Run r = run("hc " + fixture("z2_hopf") + " --max-degree 2 --format json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(dims(j.at("homology").at(0).at("engines").at(0)) == std::vector<std::size_t>{2, 0, 2});
  CHECK(dims(j.at("homology").at(1).at("engines").at(0)) == std::vector<std::size_t>{2, 0, 2});
}

TEST_CASE("iso and the corrupted comparison map") {
  CHECK(run("iso " + fixture("pair2") + " --max-degree 2").code == 0);
  Run r = run("iso " + fixture("pair2_corrupt_map") + " --max-degree 2 --format json");
  CHECK(r.code == 1);
  auto failed = failed_names(json::parse(r.out));
  REQUIRE_FALSE(failed.empty());
  for (const auto& n : failed) CHECK(n.find("bijective") == std::string::npos);
}

TEST_CASE("galois verdicts") {
  Run ok = run("galois " + fixture("pair2_self") + " --format json");
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out).at("verdict").at("galois") == true);

  // not Galois is a verdict, not an error
  Run triv = run("galois " + fixture("z2_trivial_action") + " --format json");
  CHECK(triv.code == 0);
  json v = json::parse(triv.out).at("verdict");
  CHECK(v.at("galois") == false);
  CHECK(v.at("rank") == 2);
  CHECK(v.at("dom_dim") == 4);

  Run bad = run("galois " + fixture("pair2_corrupt_nu") + " --format json");
  CHECK(bad.code == 1);
  auto failed = failed_names(json::parse(bad.out));
  REQUIRE(failed.size() >= 2);
  CHECK(failed[0] == "x");
  CHECK(failed[1].rfind("xi ", 0) == 0);
}

TEST_CASE("json output is deterministic and --out writes it") {
  std::string args = "galois " + fixture("h4_hopf") + " --format json";
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::string path = "test_cli_out.json";
  std::remove(path.c_str());
  CHECK(run(args + " --out " + path).code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == a.out);
}

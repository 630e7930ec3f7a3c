#include "smallquot/cli.hpp"
#include "smallquot/json_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace smallquot;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("smallquot_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("json encodings") {
  CHECK(to_json(int_matrix({{1, 2}})).dump() == R"({"cols":2,"entries":[[1,2]],"rows":1})");
  CHECK(to_json(int_polynomial({1, -3, 1})).dump() == "[1,-3,1]");
  CHECK(to_json(Rational(3, 4)).dump() == "\"3/4\"");
  CHECK(to_json(Rational(-2)).dump() == "\"-2\"");
  CHECK(rational_from_json(Json("-6/4")) == Rational(-3, 2));
  CHECK(rational_from_json(Json(5)) == Rational(5));
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), Error);
  CHECK_THROWS_AS(rational_from_json(Json("x")), Error);
  CHECK(equal(int_matrix_from_json(parse_json("[[1,0],[1,1]]")), int_matrix({{1, 0}, {1, 1}})));
  CHECK_THROWS_AS(int_matrix_from_json(parse_json("[[1,0],[1]]")), Error);
  CHECK_THROWS_AS(int_matrix_from_json(parse_json(R"({"rows":3,"cols":1,"entries":[[1]]})")), Error);
  const BigInt huge = BigInt(1) << 80;
  CHECK(bigint_from_json(to_json(huge)) == huge);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_json("[[1, 2], [3,");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}

TEST_CASE("cell table json") {
  const Json j = to_json(enumerate_J(CoxeterSystem::H3()));
  CHECK(j["type"] == "H3");
  CHECK(j["elements"].size() == 18);
  CHECK(j["elements"][0] == Json({{"word", "1"}, {"left", 1}, {"right", 1}}));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"fibpoly"}).code == 2);
  CHECK(run({"fibpoly", "abc"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const Result bad = run({"cells", "Q7"});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
  CHECK(bad.out.empty());
  CHECK(run({"fibpoly", "-1"}).code == 1);
  CHECK(run({"matspec", "/nonexistent/file.json"}).code == 1);
}

TEST_CASE("every subcommand has help") {
  for (const char* sub : {"cells", "fibpoly", "matspec", "classify-matrix", "oracle-under4", "enumerate-b",
                          "dihedral-table", "verify-rank3", "special", "quiver", "cells-of-algebra", "apex"}) {
    const Result r = run({sub, "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find(sub) != std::string::npos);
  }
}

TEST_CASE("cells table") {
  const Result r = run({"cells", "H3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("| R1 | 1 121") != std::string::npos);
  CHECK(r.out.find("|J| = 18") != std::string::npos);
}

TEST_CASE("fibpoly zero") {
  const Result r = run({"fibpoly", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("f_0 = 0") != std::string::npos);
  CHECK(r.out.find("g_0 = 0") != std::string::npos);
}

TEST_CASE("json reports are deterministic") {
  const Result a = run({"enumerate-b", "8", "--json"});
  const Result b = run({"--json", "enumerate-b", "8"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["command"] == "enumerate-b");
  CHECK(j["inputs"]["n"] == 8);
  CHECK(j["results"].size() == 4);
  CHECK_FALSE(j["anchors"].empty());
}

TEST_CASE("matrix file commands") {
  const auto file = temp_file("x1.json", R"({"rows":3,"cols":3,"entries":[[1,0,0],[1,1,1],[0,0,1]]})");
  const Result c = run({"classify-matrix", file, "--json"});
  CHECK(c.code == 0);
  const Json j = Json::parse(c.out);
  CHECK(j["results"]["class"] == "X1");
  CHECK(j["results"]["shape"] == Json({3, 3}));
  const Result m = run({"matspec", file});
  CHECK(m.code == 0);
  CHECK(m.out.find("charpoly") != std::string::npos);
  const auto broken = temp_file("broken.json", R"({"rows":1,"cols":2,"entries":[[1,)");
  const Result e = run({"matspec", broken});
  CHECK(e.code == 1);
  CHECK(e.err.find("parse") != std::string::npos);
  const auto reducible = temp_file("reducible.json", "[[1,0],[0,1]]");
  const Result r = run({"classify-matrix", reducible});
  CHECK(r.code == 1);
  CHECK(r.err.find("reducible") != std::string::npos);
}

TEST_CASE("oracle streams json lines") {
  const Result r = run({"oracle-under4", "2", "2"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    CHECK_NOTHROW(Json::parse(line));
    ++lines;
  }
  CHECK(lines == 4);
}

TEST_CASE("algebra files round trip") {
  const Result table = run({"dihedral-table", "6", "--json"});
  REQUIRE(table.code == 0);
  const auto alg = temp_file("alg6.json", table.out);
  const Result module = run({"dihedral-table", "6", "--module", "t", "--json"});
  REQUIRE(module.code == 0);
  const auto mod = temp_file("mod6.json", module.out);
  const Result cells = run({"cells-of-algebra", alg, "--side", "two-sided", "--json"});
  CHECK(cells.code == 0);
  const Json c = Json::parse(cells.out)["results"]["two-sided"]["cells"];
  CHECK(c.size() == 2);
  CHECK(c[1].size() == 10);
  const Result apex = run({"apex", alg, mod, "--json"});
  CHECK(apex.code == 0);
  const Json a = Json::parse(apex.out)["results"];
  CHECK(a["transitive"] == true);
  CHECK(a["apex"].size() == 10);
  CHECK(run({"cells-of-algebra", alg, "--side", "diagonal"}).code == 2);
}

TEST_CASE("rank three and quivers") {
  const Result v = run({"verify-rank3", "F4", "--json"});
  CHECK(v.code == 0);
  const Json j = Json::parse(v.out)["results"];
  CHECK(j["count"] == 2);
  CHECK(j["candidates"][0]["dynkin"] == "E6");
  const auto h3 = temp_file("h3.json", "[[2,0,1,0,0,0],[0,2,1,1,0,0],[1,1,2,0,1,0],[0,1,0,2,0,1],[0,0,1,0,2,0],[0,0,0,1,0,2]]");
  const Result ok = run({"verify-rank3", "H3", "--matrix", h3, "--assignment", "1,1,2,2,3,3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("verified: yes") != std::string::npos);
  const Result no = run({"verify-rank3", "H3", "--matrix", h3, "--assignment", "1,2,1,2,3,3"});
  CHECK(no.out.find("verified: no") != std::string::npos);
  const Result q = run({"quiver", "H4"});
  CHECK(q.code == 0);
  CHECK(q.out.find("Dynkin type: E8") != std::string::npos);
  const Result qf = run({"quiver", h3, "--json"});
  CHECK(Json::parse(qf.out)["results"]["quivers"][0]["dynkin"] == "D6");
  const Result s = run({"special", "H3"});
  CHECK(s.code == 0);
  CHECK(s.out.find("3.90211303259") != std::string::npos);
  CHECK(run({"special", "B3"}).code == 1);
}

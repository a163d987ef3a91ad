#include "doctest.h"
#include "json.hpp"
#include "ncpos/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ncpos::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args, int expect = 0) {
  const auto r = call(std::move(args));
  REQUIRE_MESSAGE(r.code == expect, r.err);
  return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = "cli_test_" + name + ".json";
  std::ofstream(path) << content;
  return path;
}

const char* kOctagon = "(7,8)(6,8)(5,8)(1,8)(1,2)(2,4)(2,3)";
const char* kHexagon = "(1,4)(4,6)(4,5)(1,2)(2,3)";

}  // namespace

TEST_CASE("enumerate caterpillars at n = 3") {
  const auto doc = call_json({"enumerate", "caterpillars", "--n", "3"});
  CHECK(doc["command"] == "enumerate caterpillars --n 3");
  REQUIRE(doc["records"].size() == 3);
  CHECK(doc["records"][0]["word"] == "(1,2)(2,3)");
  CHECK(doc["records"][0]["descent_set"] == json::array());
  CHECK(doc["records"][0]["main_index"] == 1);
  CHECK(doc["records"][1]["word"] == "(1,3)(1,2)");
  CHECK(doc["records"][1]["descent_set"] == json::array({1}));
  CHECK(doc["records"][2]["word"] == "(2,3)(1,3)");
  CHECK(doc["records"][2]["main_index"] == 2);
}

TEST_CASE("enumerate counts") {
  CHECK(call_json({"enumerate", "factorizations", "--n", "5"})["count"] == 125);
  CHECK(call_json({"enumerate", "linear", "--n", "6"})["count"] == 48);
  CHECK(call_json({"enumerate", "chains", "--n", "4"})["count"] == 16);
  CHECK(call_json({"enumerate", "ncpartitions", "--n", "5"})["count"] == 42);
  CHECK(call({"enumerate", "factorizations", "--n", "9"}).code == 2);
  CHECK(call({"enumerate", "linear", "--n", "1"}).code == 2);
}

TEST_CASE("csv output") {
  const auto r = call({"enumerate", "linear", "--n", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "word,descent_set\n\"(1,2)(2,3)\",{}\n\"(1,3)(1,2)\",{1}\n\"(2,3)(1,3)\",{1}\n");
}

TEST_CASE("expand qsym on U_n") {
  const auto doc = call_json({"expand", "qsym", "--set", "U", "--n", "4"});
  CHECK(doc["expansion"] == "s_(3):1, s_(2,1):2, s_(1,1,1):3");
  CHECK(doc["degree"] == 3);
  CHECK(doc["count"] == 8);
  CHECK(doc["schur_positive"] == true);
  CHECK(doc["hook_identity"] == true);
  CHECK(call({"expand", "qsym", "--set", "U", "--n", "13"}).code == 2);
  CHECK(call({"expand", "qsym", "--set", "custom"}).code == 2);
}

TEST_CASE("enumerate output feeds expand --input") {
  for (const char* kind : {"linear", "caterpillars", "factorizations", "chains"}) {
    const auto listing = call({"enumerate", kind, "--n", "5"});
    REQUIRE(listing.code == 0);
    const auto path = temp_file(kind, listing.out);
    const auto doc = call_json({"expand", "qsym", "--set", "custom", "--input", path});
    CHECK(doc["n"] == 5);
    CHECK(doc["symmetric"] == true);
    std::remove(path.c_str());
  }
  const auto path = temp_file("lin", call({"enumerate", "linear", "--n", "6"}).out);
  CHECK(call_json({"expand", "qsym", "--set", "custom", "--input", path})["expansion"] ==
        call_json({"expand", "qsym", "--set", "U", "--n", "6"})["expansion"]);
  CHECK(call({"expand", "qsym", "--set", "custom", "--input", path, "--n", "7"}).code == 2);
  std::remove(path.c_str());

  const auto nc = temp_file("nc", call({"enumerate", "ncpartitions", "--n", "4"}).out);
  CHECK(call({"expand", "qsym", "--set", "custom", "--input", nc}).code == 2);
  std::remove(nc.c_str());
}

TEST_CASE("expand reports a non-symmetric input") {
  const auto path = temp_file("ns", R"({"n": 4, "records": [{"descent_set": [1]}]})");
  const auto doc = call_json({"expand", "qsym", "--set", "custom", "--input", path}, 1);
  CHECK(doc["symmetric"] == false);
  std::remove(path.c_str());
  const auto bad = temp_file("bad", R"js({"n": 4, "records": ["(1,2)(1,2)(3,4)"]})js");
  CHECK(call({"expand", "qsym", "--set", "custom", "--input", bad}).code == 2);
  std::remove(bad.c_str());
}

TEST_CASE("map gy") {
  const auto hexagon = call_json({"map", "gy", "--word", kHexagon});
  CHECK(hexagon["n"] == 6);
  CHECK(hexagon["factorization"] == true);
  CHECK(hexagon["total"] == false);
  CHECK(hexagon["caterpillar"] == true);
  CHECK(hexagon["convex_caterpillar"] == false);
  CHECK(hexagon["relation"].size() == 6);
  CHECK(hexagon["linear_extensions"] == 6);
  CHECK_FALSE(hexagon.contains("coords"));

  const auto octagon = call_json({"map", "gy", "--word", kOctagon});
  CHECK(octagon["convex_caterpillar"] == true);
  CHECK(octagon["linear_extensions"] == 1);
  CHECK(octagon["descent_set"] == json::array({1, 2, 3, 4, 6}));
  CHECK(octagon["main_index"] == 4);

  const auto crossing = call_json({"map", "gy", "--word", "(1,3)(2,4)(1,2)"}, 1);
  CHECK(crossing["geometric_tree"] == false);
  CHECK(crossing["offending"].size() == 2);
  CHECK(call({"map", "gy", "--word", "(1,2"}).code == 2);
}

TEST_CASE("polygon coordinates run clockwise from the top") {
  const auto doc = call_json({"map", "gy", "--word", "(1,2)(2,3)(3,4)", "--coords"});
  REQUIRE(doc["coords"].size() == 4);
  CHECK(doc["coords"][0]["x"] == 0.0);
  CHECK(doc["coords"][0]["y"] == 1.0);
  CHECK(doc["coords"][1]["x"] == 1.0);
  CHECK(doc["coords"][1]["y"] == 0.0);
  CHECK(doc["coords"][3]["x"] == -1.0);
  const auto [x, y] = ncpos::cli::polygon_vertex(2, 6);
  CHECK(x == doctest::Approx(0.8660254037844386));
  CHECK(y == doctest::Approx(0.5));
}

TEST_CASE("verify") {
  const auto doc = call_json({"verify", "all", "--max-n", "6"});
  CHECK(doc["passed"] == true);
  CHECK(doc["summary"]["failed"] == 0);
  CHECK(doc["summary"]["run"].get<int>() > 0);
  for (const auto& c : doc["checks"]) {
    CHECK(c["status"] == "pass");
    CHECK_FALSE(c["tests"].get<std::string>().empty());
  }
  const auto one = call_json({"verify", "schur", "--n", "9"});
  CHECK(one["min_n"] == 9);
  CHECK(one["checks"].size() == 2);
  const auto skip = call_json({"verify", "gy", "--n", "7"});
  CHECK(skip["summary"]["skipped"] == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"enumerate", "trees", "--n", "3"}).code == 2);
  CHECK(call({"enumerate", "linear"}).code == 2);
  CHECK(call({"enumerate", "linear", "--n", "3", "--bogus"}).code == 2);
  CHECK(call({"verify", "counts"}).code == 2);
  CHECK(call({"verify", "counts", "--n", "3", "--max-n", "4"}).code == 2);
  CHECK(call({"verify", "gy", "--n", "20"}).code == 2);
  CHECK(call({"enumerate", "linear", "--n", "3", "--format", "xml"}).code == 2);
  const auto r = call({"frobnicate"});
  CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const auto r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("enumerate") != std::string::npos);
}

TEST_CASE("output is deterministic and ignores --seed") {
  const auto a = call({"enumerate", "caterpillars", "--n", "5"});
  const auto b = call({"enumerate", "caterpillars", "--n", "5", "--seed", "17"});
  CHECK(a.out.substr(a.out.find('\n', 4)) == b.out.substr(b.out.find('\n', 4)));
  CHECK(a.out == call({"enumerate", "caterpillars", "--n", "5"}).out);
}

#include <sstream>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "ellimod/json_io.hpp"

using namespace ellimod;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ellimod");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = run({"weights", "--group", "E8"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["result"].dump() == R"({"weights":[1,2,3,4,6,5,4,3,2]})");
  CHECK(r.json()["input"]["group"] == "E8");
  CHECK(r.json()["provenance"].is_string());

  r = run({"np", "--group", "A5", "--d", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["result"].dump() == R"({"n_P":3})");

  r = run({"canon", "--group", "A1", "--mu", "2/3,0"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["result"].dump() == R"({"representative":"1/3,0","stabilizer_order":1})");
}

TEST_CASE("global flags may precede the command") {
  const auto r = run({"--group", "B3", "weights"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["result"]["weights"].dump() == "[1,1,2,1]");
}

TEST_CASE("every command runs") {
  const std::string sl = R"({"group":"SL","n":3,"summands":[{"d":1,"lambda":["1/5","0"]},{"d":1,"lambda":["4/5","0"]},{"d":1,"lambda":["0","0"]}]})";
  const std::string sp = R"({"group":"Sp","n":2,"summands":[{"d":2,"lambda":["1/2","0"]},{"d":1,"lambda":["1/7","0"]},{"d":1,"lambda":["6/7","0"]}]})";
  const std::string so = R"({"group":"SO_odd","n":1,"summands":[{"d":3,"lambda":["0","0"]}]})";
  const std::vector<std::vector<std::string>> cases = {
      {"casimir", "--group", "E8"},
      {"strata", "--group", "E8"},
      {"strata", "--group", "E8", "--d", "3"},
      {"canon", "--group", "A2", "--mu", "1/3,0;2/3,0", "--compare", "2/3,0;1/3,0"},
      {"canon", "--group", "A2", "--mu", "1/3,0;2/3,0", "--compare", "0,0;0,0", "--heuristic"},
      {"regular", "--group", "A1", "--mu", "1/2,0"},
      {"adjoint", "--group", "A2", "--mu", "1/101,0;2/101,0"},
      {"classify-sl", "--json", sl},
      {"classify-sp", "--json", sp},
      {"classify-so", "--json", so},
      {"from-mu", "--group", "C2", "--mu", "1/2,0;9/14,0"},
      {"parabolic", "--group", "E8"},
      {"parabolic", "--group", "A4", "--d", "2"},
      {"family", "--group", "D4"},
      {"np", "--group", "C5"},
      {"spectral", "--json", sl},
      {"spectral", "--json", sp},
      {"cover-index", "--group", "C4", "--node", "1"},
      {"cover-index", "--group", "A3", "--vector", "1,2,3"},
  };
  for (const auto& args : cases) {
    CAPTURE(args[0]);
    const auto r = run(args);
    CHECK(r.code == 0);
    CHECK(r.json().contains("result"));
  }
  CHECK(run({"regular", "--group", "A1", "--mu", "1/2,0"}).json()["result"]["aut_dim_split"] == 3);
  CHECK(run({"canon", "--group", "A2", "--mu", "1/5,0;0,0", "--compare", "4/5,0;0,0"})
            .json()["result"]["equal"] == true);
  CHECK(run({"canon", "--group", "A2", "--mu", "1/3,0;2/3,0", "--compare", "2/3,0;1/3,0"})
            .json()["result"]["equal"] == false);
  CHECK(run({"cover-index", "--group", "C4", "--node", "1"}).json()["result"]["cover_index"] == 8);
  CHECK(run({"classify-sl", "--json", sl}).json()["result"]["aut_dim"] == 2);
  CHECK(run({"spectral", "--json", sp}).json()["result"]["involution_fixed"].size() == 1);
}

TEST_CASE("validation errors exit 2 with the library error code") {
  struct Case {
    std::vector<std::string> args;
    const char* code;
  };
  const std::vector<Case> cases = {
      {{"weights", "--group", "E9"}, "invalid_root_system"},
      {{"canon", "--group", "A1", "--mu", "1/2"}, "malformed_input"},
      {{"family", "--group", "E8"}, "excluded_type"},
      {{"np", "--group", "A5"}, "invalid_parameter"},
      {{"strata", "--group", "E8", "--d", "1"}, "invalid_parameter"},
      {{"classify-sp", "--json", R"({"group":"Sp","n":2,"summands":[{"d":3,"lambda":["1/2","0"]},{"d":1,"lambda":["1/2","0"]}]})"},
       "odd_block_at_two_torsion"},
      {{"classify-so", "--json", R"({"group":"SO_even","n":3,"summands":[{"d":3,"lambda":["0","0"]},{"d":1,"lambda":["1/2","0"]},{"d":1,"lambda":["0","1/2"]},{"d":1,"lambda":["1/2","1/2"]}]})"},
       "non_liftable"},
      {{"classify-sl", "--json", "{not json"}, "malformed_input"},
      {{"from-mu", "--group", "E6", "--mu", "0,0;0,0;0,0;0,0;0,0;0,0"}, "wrong_system_type"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args[0]);
    const auto r = run(c.args);
    CHECK(r.code == 2);
    CHECK(r.json()["error"]["code"] == c.code);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"weights"}).code == 1);
  CHECK(run({"canon", "--group", "A1"}).code == 1);
  CHECK(run({"np", "--group", "A1", "--d", "x"}).code == 1);
  CHECK(run({"cover-index", "--group", "A2"}).code == 1);
  CHECK(run({"cover-index", "--group", "A2", "--node", "1", "--vector", "1,0"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("markdown rendering") {
  const auto r = run({"family", "--group", "D4", "--markdown"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("| exponent | weight |") != std::string::npos);
  CHECK(r.out.find("| 6 | 2 |") != std::string::npos);
}

TEST_CASE("JSON output re-parses to the same values") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"parabolic", "--group", "E7"},
           {"adjoint", "--group", "E6", "--mu", "1/2,0;0,0;1/3,0;0,0;0,1/2;1/4,1/4"},
           {"from-mu", "--group", "A4", "--mu", "1/3,0;2/3,1/2;0,0;1/6,1/6"}}) {
    const auto r = run(args);
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
  }
}

TEST_CASE("verify subcommand") {
  const auto r = run({"verify", "--samples", "20", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["passed"] == true);
  CHECK(r.json()["result"]["criteria"].size() == 11);
}

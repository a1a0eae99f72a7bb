#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "io.hpp"
#include "scg/errors.hpp"

using scg::cli::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = scg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body = {}) {
  const auto path = std::filesystem::temp_directory_path() / ("scg_cli_test_" + name);
  if (!body.empty()) std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("cost specs") {
  using scg::cli::parse_cost_spec;
  CHECK(parse_cost_spec("linear") == Json::parse(R"({"kind":"linear","slope":"1","intercept":"0"})"));
  CHECK(parse_cost_spec("quadratic")["coeffs"] == Json::parse(R"(["0","0","1"])"));
  CHECK(parse_cost_spec("table:1,2,4")["values"] == Json::parse(R"(["1","2","4"])"));
  CHECK(parse_cost_spec("exp:3,1/2")["scale"] == "1/2");
  CHECK(parse_cost_spec("linear:1.1,0")["slope"] == "11/10");
  CHECK_THROWS_AS(parse_cost_spec("cubic"), scg::ValidationError);
  CHECK_THROWS_AS(parse_cost_spec("linear:1"), scg::ValidationError);
  CHECK(scg::cli::parse_int_list("5,3,2") == std::vector<int>{5, 3, 2});
  CHECK_THROWS_AS(scg::cli::parse_int_list("5,,2"), scg::ValidationError);
}

TEST_CASE("analyze: unbalanced partition of seven players") {
  const auto r = run({"analyze", "--n", "7", "--m", "3", "--partition", "[[0,1,2],[3,4],[5,6]]"});
  CHECK(r.code == 0);
  const Json j = r.json()["result"];
  CHECK(j["balanced"] == false);
  CHECK(j["hat_c_optimal"] == true);
  CHECK(j["bar_c_optimal"] == false);
  CHECK(j["coalitions"][1]["class"] == "remainder");
  CHECK(j["coalitions"][1]["outsider_pmf"] == Json::parse(R"(["0","1/3","2/3"])"));
  CHECK(j["coalitions"][1]["effective_cost"] == Json::parse(R"(["8/3","11/3"])"));
  CHECK(j["support"].size() == 6);
}

TEST_CASE("analyze: grand coalitions") {
  auto r = run({"analyze", "--n", "6", "--m", "3", "--partition", "[[0,1,2,3,4,5]]"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["balanced"] == true);
  CHECK(r.json()["result"]["bar_c_optimal"] == true);
  CHECK(r.json()["result"]["hat_c_optimal"] == true);

  for (const char* path : {"--oracle", "--format"}) {
    std::vector<std::string> args{"analyze", "--n", "3", "--m", "2", "--partition", "[[0,1,2]]"};
    if (std::string(path) == "--oracle") args.push_back("--oracle");
    r = run(args);
    CHECK(r.code == 3);
    CHECK(r.err.find("no equilibrium") != std::string::npos);
    CHECK(r.json()["result"]["no_equilibrium"]["players"] == Json::parse("[0,1,2]"));
  }
}

TEST_CASE("analyze reads game and partition files") {
  const auto game = temp_file("game.json", R"({"n": 4, "m": 2, "cost": {"kind": "table", "values": [1, 2, 4, 8, 16]}})");
  const auto part = temp_file("partition.json", "[[0, 1], [2, 3]]");
  const auto r = run({"analyze", "--game", game.string(), "--partition", part.string()});
  CHECK(r.code == 0);
  CHECK(r.json()["input"]["game"]["cost"]["values"] == Json::parse(R"(["1","2","4","8"])"));
  CHECK(r.json()["result"]["bar_c_optimal"] == true);
}

TEST_CASE("validation errors exit with 2") {
  CHECK(run({"analyze", "--n", "3", "--m", "2", "--partition", "[[0,1],[1,2]]"}).code == 2);
  CHECK(run({"analyze", "--n", "3", "--m", "2", "--partition", "[[0,1]]"}).code == 2);
  CHECK(run({"analyze", "--n", "3", "--m", "2", "--cost", "table:1,3,4", "--partition", "[[0],[1],[2]]"}).code == 2);
  CHECK(run({"analyze", "--game", "/nonexistent/game.json", "--partition", "[[0]]"}).code == 2);
  CHECK(run({"analyze", "--game", "{\"n\": 2", "--partition", "[[0,1]]"}).code == 2);
  CHECK(run({"mnp", "--weights", "1,0", "--m", "2"}).code == 2);
  CHECK(run({"mnp", "--weights", "1,2", "--m", "2", "--objective", "median"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cap exceeded exits with 4") {
  CHECK(run({"--cap", "100", "verify", "lemma1", "--n", "7", "--m", "3"}).code == 4);
  CHECK(run({"verify", "lemma1", "--n", "7", "--m", "3", "--cap", "100"}).code == 4);
  CHECK(run({"mnp", "--weights", "1,1,1,1,1,1,1,1", "--m", "3", "--method", "exhaustive", "--cap", "10"}).code == 4);
  CHECK(run({"analyze", "--oracle", "--n", "9", "--m", "3", "--partition", "[[0,1,2,3,4,5,6,7,8]]"}).code == 4);

  setenv("SCG_CAP", "100", 1);
  const auto r = run({"verify", "lemma1", "--n", "7", "--m", "3"});
  unsetenv("SCG_CAP");
  CHECK(r.code == 4);
  CHECK(run({"verify", "lemma1", "--n", "7", "--m", "3"}).code == 0);
}

TEST_CASE("verify scopes") {
  auto r = run({"verify", "theorem1", "--n", "7", "--m", "3", "--cost", "linear"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["passed"] == true);
  CHECK(r.json()["result"]["rows"].size() == 15);

  r = run({"verify", "prop2", "--size", "4", "--m", "2"});
  CHECK(r.code == 0);
  for (const auto& region : r.json()["result"]["regions"]) {
    if (region["forbidden"] == true) CHECK(region["count"] == 0);
    if (region["count"] != 0) CHECK_FALSE(region["witness"].is_null());
  }

  r = run({"verify", "lemma1", "--n", "7", "--m", "3"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["uneven_max_optimal_witness"]["loads"] == Json::parse("[3,3,1]"));

  r = run({"verify", "oracle", "--n", "4", "--m", "2", "--cost", "quadratic", "--all-partitions"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["rows"].size() == 15);

  r = run({"verify", "weighted", "--weights", "1,2,3", "--m", "2"});
  CHECK(r.code == 0);
  const Json hat = r.json()["result"]["hat_c_search"];
  CHECK(hat["message"] == "no ĉ-optimal partition exists");
  CHECK(hat["grand_coalition_minimax_agreements"][0]["base_weights"] == Json::parse("[2,1,0]"));
  CHECK(hat["grand_coalition_minimax_agreements"][0]["envy_free"] == false);
}

TEST_CASE("mnp") {
  auto r = run({"mnp", "--weights", "5,3,2,2,1", "--m", "4", "--objective", "min_var", "--all"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["optimal_loads"] == Json::parse("[[5,3,3,2]]"));
  r = run({"mnp", "--weights", "1,2,3", "--m", "2", "--objective", "minimax"});
  CHECK(r.json()["result"]["value"] == 3);
  r = run({"mnp", "--weights", "4", "--m", "1"});
  CHECK(r.json()["result"]["loads"] == Json::parse("[4]"));
  r = run({"mnp", "--weights", "5,3,2,2,1", "--m", "4", "--method", "bnb", "--objective", "min-gap"});
  CHECK(r.json()["result"]["value"] == 3);
}

TEST_CASE("weighted and agreements") {
  auto r = run({"weighted", "--game", R"({"weights": [2, 2, 2, 2], "m": 2, "cost": {"kind": "linear"}})"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["hat_c_search"]["partition"] == "[0123]");
  CHECK(r.json()["result"]["grand_coalition_structure"]["base_weight"] == 2);

  r = run({"agreements", "--size", "3", "--m", "2"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["agreements"].size() == 8);
  CHECK(r.json()["result"]["qualified_loads"].empty());

  r = run({"agreements", "--n", "7", "--m", "3", "--partition", "[[0,1,2],[3,4],[5,6]]", "--coalition", "1"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["effective_cost"] == Json::parse(R"(["8/3","11/3"])"));
  CHECK(r.json()["result"]["qualified_loads"] == Json::parse("[[1,1,0]]"));
}

TEST_CASE("formats") {
  const std::vector<std::string> base{"analyze", "--n", "7", "--m", "3", "--partition", "[[0,1,2],[3,4],[5,6]]"};
  auto args = base;
  args.insert(args.end(), {"--format", "csv"});
  auto r = run(args);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("loads,probability,total_cost,max_cost,even\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);

  args = base;
  args.insert(args.end(), {"--format", "table"});
  r = run(args);
  CHECK(r.out.find("balanced: false") != std::string::npos);
  CHECK(run({"--format", "xml", "mnp", "--weights", "1", "--m", "1"}).code == 2);
}

TEST_CASE("reports are deterministic and re-checkable") {
  const std::vector<std::string> args{"verify", "theorem1", "--n", "6", "--m", "2", "--cost", "exp"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.out == b.out);

  const auto path = temp_file("report.json");
  auto with_output = args;
  with_output.insert(with_output.end(), {"--output", path.string()});
  CHECK(run(with_output).code == 0);
  auto r = run({"--check", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("check passed") != std::string::npos);

  Json tampered = Json::parse(a.out);
  tampered["result"]["rows"][0]["balanced"] = false;
  std::ofstream(path) << tampered.dump(2) << "\n";
  CHECK(run({"--check", path.string()}).code == 1);

  std::ofstream(path) << "not json";
  CHECK(run({"--check", path.string()}).code == 2);
  std::filesystem::remove(path);
}

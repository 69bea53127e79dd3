#include <doctest.h>

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "krulldim/cli.hpp"

using namespace krulldim;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"krulldim"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* const kKpm = "pullback(T=val(2,1),m=1,D=field(0),outside=0)";

std::vector<std::string> keys(const nlohmann::ordered_json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST_CASE("dim text output") {
  Run r = run({"dim", "field(2)", "field(3)"});
  CHECK(r.code == 0);
  CHECK(r.out == "2 (Sharp)\n");
  r = run({"dim", kKpm, "af(1,1)"});
  CHECK(r.code == 0);
  CHECK(r.out == "3 (Thm 2.8)\n");
  r = run({"dim", "af(2,2)", "af(1,1)"});
  CHECK(r.out == "3 (Wadsworth 3.8)\n");
}

TEST_CASE("dim json schema and ordering") {
  const Run r = run({"dim", kKpm, kKpm, "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(keys(j) == std::vector<std::string>{"value", "theorem", "witnesses", "terms", "gates"});
  CHECK(j["value"] == 3);
  CHECK(j["theorem"] == "Thm2.8");
  CHECK(keys(j["witnesses"][0]) == std::vector<std::string>{"term", "ref", "value"});
  // Same bytes on a second run.
  CHECK(run({"dim", kKpm, kKpm, "--json"}).out == r.out);
}

TEST_CASE("spectrum") {
  Run r = run({"spectrum", kKpm, "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(keys(j) == std::vector<std::string>{"strata", "pairs", "flags"});
  CHECK(j["strata"].size() == 2);
  CHECK(j["strata"][1]["selector"] == "M");
  CHECK(j["strata"][1]["poly_height"]["cap"] == 1);
  CHECK(j["flags"]["is_af"] == false);
  CHECK(j["flags"]["pullback"]["td_KD"] == 1);
  r = run({"spectrum", "af(2,1)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("af(2,1)") == 0);
}

TEST_CASE("ht") {
  Run r = run({"ht", kKpm, "af(1,1)", "--p", "M", "--q", "M"});
  CHECK(r.code == 0);
  CHECK(r.out == "3 (Thm 2.8)\n");
  r = run({"ht", "af(1,1)", "af(1,1)", "--p", "M", "--q", "M", "--delta", "0", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["value"] == 2);
  CHECK(j["formula"] == "SCT");
  r = run({"ht", kKpm, "af(1,1)", "--p", "0", "--q", "M", "--delta", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("fiber") != std::string::npos);
  r = run({"ht", kKpm, "af(1,1)", "--p", "in:3", "--q", "M"});
  CHECK(r.code == 2);
}

TEST_CASE("check") {
  Run r = run({"check", "sharp-grid"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sharp-grid: 49 cases") == 0);
  r = run({"check", "kplusm-anchor", "--json", "--serial"});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(keys(j) == std::vector<std::string>{"suite", "cases", "checks", "failures", "passed"});
  CHECK(j["passed"] == true);
  r = run({"check", "no-such-suite"});
  CHECK(r.code == 2);
}

TEST_CASE("explain") {
  Run r = run({"explain", kKpm, "af(1,1)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dispatch:") != std::string::npos);
  CHECK(r.out.find("A:Thm2.8-catenarian") != std::string::npos);
  CHECK(r.out.find("containsM at B:(0⊆M) = 3") != std::string::npos);
  CHECK(r.out.find("dim = 3 (Thm 2.8)") != std::string::npos);
  r = run({"explain", kKpm, kKpm, "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(keys(j) == std::vector<std::string>{"A", "B", "dispatch", "report"});
  CHECK(j["report"]["value"] == 3);
}

TEST_CASE("input errors exit with status 2") {
  Run r = run({"dim", "pullback(T=field(1), m=1, D=field(0), outside=0)", "field(0)"});
  CHECK(r.code == 2);
  CHECK(r.err.find("pullback.m_le_dim_T") != std::string::npos);
  CHECK(r.err.find("columns 1-") != std::string::npos);
  r = run({"dim", "field(2", "field(0)"});
  CHECK(r.code == 2);
  CHECK(r.err.find("syntax error at column 8") != std::string::npos);
  CHECK(r.err.find("^") != std::string::npos);
  r = run({"dim", "field(2)"});
  CHECK(r.code == 2);
  r = run({"frobnicate"});
  CHECK(r.code == 2);
  r = run({"dim", "pullback(T=af(6,3,cat=false),m=3,D=field(0),outside=3)",
           "pullback(T=af(6,3,cat=false),m=3,D=field(0),outside=3)"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unsupported") == 0);
}

TEST_CASE("help exits cleanly") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim") != std::string::npos);
}

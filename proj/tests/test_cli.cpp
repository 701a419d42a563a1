#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "sepcong");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sepcong::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SEPCONG_TEST_DATA) + "/" + name; }

nlohmann::json parsed(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("validate") {
  const auto r = invoke({"validate", data("table1.txt")});
  CHECK(r.code == 0);
  CHECK(r.out == "valid commutative semigroup of order 3\nidentity: 1\nzero: 0\n");
  const auto bad = invoke({"validate", data("nonassoc.txt"), "--format", "json"});
  CHECK(bad.code == 1);
  CHECK(parsed(bad)["failure"]["clause"] == "AssociativityViolation");
  CHECK(invoke({"validate", "/no/such/file"}).code == 2);
}

TEST_CASE("separator and congruence commands") {
  auto r = invoke({"sep", data("table1.txt"), "0", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(parsed(r)["separator"] == nlohmann::json::array({"1"}));
  r = invoke({"pcong", data("table2.txt"), "0", "--format", "json"});
  CHECK(parsed(r)["classes"].size() == 4);
  r = invoke({"quotient", data("table1.txt"), "2,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n0 1\n1 1\nlabels: [1] [2]\n");
  CHECK(invoke({"sep", data("table1.txt"), "9"}).code == 2);
}

TEST_CASE("star and laws") {
  auto r = invoke({"star", data("table1.txt"), "--format", "json"});
  CHECK(r.code == 0);
  const auto j = parsed(r);
  CHECK(j["annihilators"][0]["annihilator"] == nlohmann::json::array({"0"}));
  CHECK(j["annihilators"][1]["annihilator"] == nlohmann::json::array({"2", "0"}));
  CHECK(j["annihilators"][2]["annihilator"].size() == 3);
  r = invoke({"laws", data("table2.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 failures\n") != std::string::npos);
}

TEST_CASE("residue sequence reproduces the second table") {
  const std::string z6 = "cli_test_z6.txt";
  const std::string q = "cli_test_q.txt";
  std::ofstream(z6) << invoke({"ring", "int", "6"}).out;
  std::ofstream(q) << invoke({"quotient", z6, "0"}).out;
  const auto r = invoke({"iso", q, data("table2.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.find("isomorphic\n") != std::string::npos);
  CHECK(invoke({"iso", z6, data("table2.txt")}).code == 1);
}

TEST_CASE("tau json schema") {
  const auto r = invoke({"tau", "int", "6", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == invoke({"tau", "int", "6", "--format", "json"}).out);
  const auto j = parsed(r);
  CHECK(j["modulus"] == "6");
  CHECK(j["divisors"] == nlohmann::json::array({"6", "1", "2", "3"}));
  CHECK(j["classes"] == nlohmann::json::parse("[[0],[1,5],[2,4],[3]]"));
}

TEST_CASE("divisor counts and checks") {
  auto r = invoke({"dcount", "F5", "x^3+2x^2+4x+3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(parsed(r)["divisor_count"] == 8);
  CHECK(parsed(r)["oracle"] == 8);
  r = invoke({"dcount", "int", "5040", "--max-abs", "100", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(parsed(r)["oracle"].is_null());
  r = invoke({"thm3", "Q(-7)", "3+1*w"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(invoke({"thm3", "int", "0"}).code == 2);
  CHECK(invoke({"thm3", "Q(-5)", "2"}).code == 2);
}

TEST_CASE("quadratic ideals") {
  auto r = invoke({"qideal", "-1", "2", "1+1*w", "--format", "json"});
  CHECK(r.code == 0);
  auto j = parsed(r);
  CHECK(j["d"] == -1);
  CHECK(j["hnf"] == nlohmann::json::parse("[[2,1],[0,1]]"));
  CHECK(j["norm"] == 2);
  CHECK(j["generator"] == "1+1*w @ Q(-1)");
  CHECK(j["conjugate_product"]["generator"] == "2+0*w @ Q(-1)");
  r = invoke({"qideal", "ideal(-7; 2, 1+1*w)", "--verify", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(parsed(r)["verify"]["pass"] == true);
  CHECK(invoke({"qideal", "-1"}).code == 2);
  CHECK(invoke({"qideal", "-1", "0"}).code == 2);
}

TEST_CASE("census and pools need seeds for sampling") {
  auto r = invoke({"census", "--order", "2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(parsed(r)["semigroups"] == sepcong::oracle::count_tables_by_brute_force(2));
  CHECK(invoke({"census", "--order", "5", "--count", "3"}).code == 2);
  r = invoke({"census", "--order", "5", "--count", "5", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == invoke({"census", "--order", "5", "--count", "5", "--seed", "3"}).out);
  CHECK(invoke({"pool", "Q(-3)"}).code == 2);
  r = invoke({"pool", "Q(-3)", "--seed", "1", "--count", "4", "--max-norm", "50"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
}

TEST_CASE("sharpness") {
  auto r = invoke({"sharp", "int", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(parsed(r)["a"] == "2");
  CHECK(parsed(r)["b"] == "3");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"star", data("table1.txt"), "--format", "xml"}).code == 2);
  CHECK(invoke({"star", data("table1.txt"), "--bogus"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

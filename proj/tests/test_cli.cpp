#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "maxsg/cli.hpp"
#include "maxsg/error.hpp"
#include "maxsg/parse.hpp"
#include "oracles.hpp"

using namespace maxsg;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string text;
  json body() const { return json::parse(text); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "maxsg");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out);
  return {code, out.str()};
}

void expect_error(const std::vector<std::string>& args, const std::string& code) {
  Run r = run(args);
  INFO(r.text);
  CHECK(r.code == 1);
  CHECK(r.body()["error"] == code);
  CHECK(r.body().contains("message"));
}

const std::vector<std::string> kCatalog{
    "id",
    "shift(1)",
    "shift(4)",
    "times(2)",
    "times(3)",
    "divfloor(2)",
    "divfloor(3)",
    "perm([1,0])",
    "perm([2,0,1])",
    "perm([0,3,1,2])",
    "affine(0,4,8,[0,2,5,7])",
    "affine(2,1,2,[1,0,4])",
    "cantor_proj",
    "compose(times(2), divfloor(2))",
    "compose(cantor_proj,times(2))",
    "compose(shift(1),compose(cantor_proj,perm([1,0])))",
};

}  // namespace

TEST_CASE("printed expressions reparse to the same map") {
  for (const auto& text : kCatalog) {
    INFO(text);
    MapExpr e = parse_expr(text);
    MapExpr back = parse_expr(to_string(e));
    for (std::uint64_t x = 0; x < 1000; ++x) {
      REQUIRE(eval(back, x) == eval(e, x));
      REQUIRE(oracle::eval(e, x) == eval(e, x));
    }
  }
  CHECK(to_string(parse_expr("times(2)")) == "affine(0,1,2,[0])");
  CHECK(parse_expr("compose(times(2), divfloor(2))").composite() != nullptr);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_expr("compose(times(2)");
    FAIL("parsed an unterminated expression");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_expr("times(x)"), ParseError);
  CHECK_THROWS_AS(parse_expr("cantor_proj trailing"), ParseError);
  CHECK(parse_naturals("0,1,5") == std::vector<std::uint64_t>{0, 1, 5});
}

TEST_CASE("certify") {
  Run r = run({"certify", "times(2)"});
  REQUIRE(r.code == 0);
  json c = r.body()["certificate"];
  CHECK(c["inj"] == "yes");
  CHECK(c["surj"] == "no");
  CHECK(c["d"] == json{{"lo", "aleph0"}, {"hi", "aleph0"}});
  CHECK(c["c"] == json{{"lo", 0}, {"hi", 0}});
  CHECK(c["kinf"] == json{{"lo", 0}, {"hi", 0}});
  CHECK(c["finImage"] == "no");
  CHECK(r.body()["window"]["M"] == 1000);
  CHECK(run({"--window", "50", "certify", "times(2)"}).body()["window"]["missed"] == 25);
  CHECK(run({"certify", "cantor_proj"}).body()["normal_form"].is_null());
}

TEST_CASE("classify") {
  Run s5 = run({"classify", "S5", "cantor_proj"});
  CHECK(s5.code == 0);
  CHECK(s5.body()["answer"] == "no");
  CHECK(s5.body()["reason"] == "k(f,ℵ₀)=ℵ₀");
  Run f1 = run({"classify", "F1", "times(2)", "--gamma", "0,1", "--mu", "aleph0"});
  CHECK(f1.code == 0);
  CHECK(f1.body()["params"]["gamma"] == json{0, 1});
  Run a1 = run({"classify", "A1", "shift(1)", "--n", "2"});
  CHECK(a1.code == 0);
  Run undecided = run({"classify", "S5", "compose(times(2),compose(cantor_proj,times(2)))"});
  CHECK(undecided.code == 2);
  CHECK(undecided.body()["answer"] == "unknown");
}

TEST_CASE("genpair") {
  Run sym = run({"genpair", "sym", "times(2)", "cantor_proj"});
  CHECK(sym.code == 0);
  CHECK(sym.body()["answer"] == "generates");
  Run halve = run({"genpair", "sym", "times(2)", "divfloor(2)"});
  CHECK(halve.code == 0);
  CHECK(halve.body()["answer"] == "does_not_generate");
  CHECK(halve.body()["witness"]["family"] == "S5");
  Run pw = run({"genpair", "pointwise", "times(2)", "cantor_proj", "--gamma", "0"});
  CHECK(pw.body()["answer"] == "does_not_generate");
  Run filt = run({"genpair", "filter", "affine(0,1,2,[2])", "cantor_proj", "--gamma", "0"});
  CHECK(filt.body()["answer"] == "generates");
  Run part = run({"genpair", "partition", "affine(0,4,8,[0,2,5,7])", "cantor_proj", "--n", "2"});
  CHECK(part.body()["answer"] == "generates");
}

TEST_CASE("rho, bfin and maxtn") {
  Run r = run({"rho", "times(2)", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.body()["relation"] == "{(0,0),(1,0)}");
  CHECK(r.body()["total"] == true);
  Run b = run({"bfin", "{(0,0),(0,1),(1,0)}", "{(0,0),(0,1),(1,0)}", "--n", "2"});
  CHECK(b.code == 0);
  CHECK(b.body()["value"] == "{(0,0),(0,1),(1,0),(1,1)}");
  CHECK(b.body()["length"] == 2);
  Run g = run({"bfin", "{(0,0),(0,1),(1,0)}", "{(0,0),(0,1),(1,0)}", "--n", "2",
               "--algorithm", "greedy"});
  CHECK(g.code == 0);
  CHECK(g.body()["value"] == "{(0,0),(0,1),(1,0),(1,1)}");
  Run m = run({"maxtn", "--n", "3"});
  CHECK(m.code == 0);
  CHECK(m.body()["count"] == 5);
  CHECK(m.body()["maximal_subgroups"] == 4);
  CHECK(m.body()["completeness"]["complete"] == true);
}

TEST_CASE("selftest") {
  Run all = run({"selftest"});
  CHECK(all.code == 0);
  CHECK(all.body()["failed"] == 0);
  CHECK(all.body()["passed"].get<int>() > 0);
  CHECK(run({"selftest", "fintrans"}).code == 0);
  expect_error({"selftest", "nonsense"}, "UsageError");
}

TEST_CASE("errors exit with 1") {
  expect_error({"certify", "compose(times(2)"}, "ParseError");
  expect_error({"certify", "affine(0,2,1,[0])"}, "ArityError");
  expect_error({"genpair", "filter", "id", "id", "--filter", "frechet"}, "UnsupportedFilter");
  expect_error({"classify", "F2", "times(2)", "--gamma", "0", "--mu", "aleph0"},
               "InvalidParameters");
  expect_error({"bfin", "{(0,1),(1,0)}", "{(0,0),(0,1),(1,0)}", "--n", "2"},
               "HypothesisViolated");
  expect_error({}, "UsageError");
  expect_error({"bogus"}, "UsageError");
  expect_error({"classify", "S9", "id"}, "UsageError");
  expect_error({"classify", "F1", "id"}, "UsageError");
  expect_error({"genpair", "nowhere", "id", "id"}, "UsageError");
}

TEST_CASE("pretty output and help") {
  Run p = run({"--pretty", "certify", "times(2)"});
  CHECK(p.code == 0);
  CHECK(p.text.find("normal_form  affine(0,1,2,[0])\n") != std::string::npos);
  Run h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.text.find("certify") != std::string::npos);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::vector<std::string>> commands{
      {"certify", "compose(cantor_proj,times(2))"},
      {"classify", "U1", "id", "--filter", "frechet", "--mu", "aleph0"},
      {"genpair", "partition", "shift(1)", "cantor_proj", "--n", "2"},
      {"bfin", "{(0,0),(0,1),(1,0)}", "{(0,0),(0,1),(1,0)}", "--n", "2"},
      {"maxtn", "--n", "2"},
  };
  for (const auto& c : commands) {
    Run a = run(c);
    Run b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.text == b.text);
  }
}

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "lgeo/cli.hpp"
#include "lgeo/io.hpp"

using namespace lgeo;

namespace {

std::string data(const std::string& name) { return std::string(LGEO_TEST_DATA) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("lgeo_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("compute-lc on Hardy-Weinberg") {
  const Result r = invoke({"compute-lc", "--ideal", data("hw.ideal")});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out ==
        "ring p_0 p_1 p_2 u_0 u_1 u_2\n"
        "order grevlex\n"
        "4*p_2*u_0 - p_1*u_1 + 2*p_2*u_1 - 2*p_1*u_2\n"
        "2*p_1*u_0 - 2*p_0*u_1 + p_1*u_1 - 4*p_0*u_2\n"
        "p_1^2 - 4*p_0*p_2\n");
}

TEST_CASE("ml-degree, scroll and drv outputs") {
  CHECK(invoke({"ml-degree", "--ideal", data("hw.ideal"), "--seed", "7"}).out == "1\n");
  CHECK(invoke({"--format", "json", "ml-degree", data("hw.ideal")}).out == "{\"ml_degree\": 1}\n");
  CHECK(invoke({"ml-degree", data("rnc3.mat"), "--trials", "5", "--range", "1:50"}).out == "3\n");
  CHECK(invoke({"scroll", "--blocks", "4"}).out == "1 1 1 1\n0 1 2 3\n");
  CHECK(invoke({"scroll", "--blocks", "2,2,3"}).out == read_file(data("scroll.mat")));
  CHECK(invoke({"drv", "--arity", "3", "states"}).out == "1 2 3\n");
  CHECK(invoke({"drv", "--arity", "3", "--pmf", "1/2,3/10,1/5", "mean"}).out == "17/10\n");
  CHECK(invoke({"drv", "--arity", "3", "--pmf", "0.5,0.3,0.2", "mean", "--format", "json"}).out ==
        "{\"mean\": \"17/10\"}\n");
  CHECK(invoke({"drv", "--arity", "3", "sample", "--n", "8", "--seed", "7"}).out == "2 1 3 2 2 1 2 1\n");
  CHECK(invoke({"drv", "--arity", "3", "--pmf", "1/2,3/10,1/5", "sample", "-n", "10", "--seed", "2024"}).out ==
        "2 1 1 1 3 2 1 2 1 1\n");
}

TEST_CASE("matrix and toric subcommands") {
  CHECK(invoke({"loglinear-matrix", data("chain_generators.json")}).out ==
        "1 1 0 0 0 0 0 0\n0 0 1 1 0 0 0 0\n0 0 0 0 1 1 0 0\n0 0 0 0 0 0 1 1\n"
        "1 0 0 0 1 0 0 0\n0 1 0 0 0 1 0 0\n0 0 1 0 0 0 1 0\n0 0 0 1 0 0 0 1\n");
  CHECK(invoke({"loglinear-matrix", "--graph", data("chain.json")}).out ==
        invoke({"loglinear-matrix", data("chain_generators.json")}).out);

  const Result toric = invoke({"toric-ideal", "--matrix", data("twisted_cubic.mat")});
  REQUIRE(toric.code == 0);
  const Ideal cubic = parse_ideal_text(toric.out);
  CHECK(ideal_equal(cubic, testing::ideal_of(cubic.ring(), {"p_1^2 - p_0*p_2", "p_1*p_2 - p_0*p_3",
                                                             "p_2^2 - p_1*p_3"})));
  const std::string path = temp_file("cubic.ideal", toric.out);
  const Result polytope = invoke({"toric-polytope", path});
  REQUIRE(polytope.code == 0);
  CHECK(lattice_span_equal(parse_int_matrix(polytope.out), IntMatrix{{1, 1, 1, 1}, {-2, -1, 0, 1}}));

  const Result chain = invoke({"toric-ideal", data("chain.json"), "--format", "json"});
  const auto doc = nlohmann::json::parse(chain.out);
  CHECK(doc["ring"]["variables"].size() == 8);
  CHECK(doc["generators"].size() == 2);
}

TEST_CASE("groebner subcommand") {
  const Result lex = invoke({"groebner", data("hw.ideal"), "--order", "lex"});
  CHECK(lex.out == "ring p_0 p_1 p_2\norder lex\np_0*p_2 - 1/4*p_1^2\n");
  const Result grevlex = invoke({"groebner", data("hw.ideal")});
  CHECK(grevlex.out == "ring p_0 p_1 p_2\norder grevlex\np_1^2 - 4*p_0*p_2\n");
}

TEST_CASE("text output round trips through the parser") {
  for (const char* file : {"hw.ideal", "independence.ideal", "p1.mat", "p2.mat", "rnc2.mat", "rnc3.mat",
                           "twisted_cubic.mat", "independence.mat", "chain.json", "chain_generators.json"}) {
    CAPTURE(file);
    const Result r = invoke({"compute-lc", data(file)});
    REQUIRE(r.code == 0);
    const Ideal reparsed = parse_ideal_text(r.out);
    const LikelihoodIdeal direct = compute_lc(load_model(data(file)));
    CHECK(ideal_equal(reparsed, direct.ideal));

    const Result json = invoke({"compute-lc", data(file), "--format", "json"});
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["generators"].size() == direct.generators().size());
  }
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::vector<std::string>> commands{
      {"ml-degree", data("rnc3.mat"), "--seed", "11", "--trials", "3"},
      {"compute-lc", data("chain.json"), "--format", "json"},
      {"drv", "--arity", "5", "sample", "--n", "50", "--seed", "3"},
      {"toric-ideal", data("scroll.mat")}};
  for (const auto& args : commands) {
    const Result a = invoke(args);
    const Result b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("exit codes") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"--help"}, kExitOk},
      {{}, kExitInput},
      {{"bogus"}, kExitInput},
      {{"compute-lc", "--bogus", data("hw.ideal")}, kExitInput},
      {{"compute-lc"}, kExitInput},
      {{"compute-lc", data("hw.ideal"), "--ideal", data("hw.ideal")}, kExitInput},
      {{"compute-lc", data("missing.ideal")}, kExitInput},
      {{"compute-lc", data("bad/syntax.ideal")}, kExitInput},
      {{"compute-lc", data("bad/unknown_variable.ideal")}, kExitInput},
      {{"compute-lc", data("bad/no_ring.ideal")}, kExitInput},
      {{"compute-lc", data("bad/order.ideal")}, kExitInput},
      {{"compute-lc", data("bad/inhomogeneous.ideal")}, kExitInput},
      {{"compute-lc", data("bad/unit.ideal")}, kExitInput},
      {{"compute-lc", data("bad/ragged.mat")}, kExitInput},
      {{"compute-lc", data("bad/entry.mat")}, kExitInput},
      {{"compute-lc", data("bad/syntax.json")}, kExitInput},
      {{"compute-lc", data("bad/pmf.json")}, kExitInput},
      {{"compute-lc", data("bad/edge.json")}, kExitInput},
      {{"compute-lc", data("bad/both.json")}, kExitInput},
      {{"compute-lc", data("bad/model.txt")}, kExitInput},
      {{"compute-lc", data("hw.ideal"), "--saturation", "partial"}, kExitInput},
      {{"ml-degree", data("hw.ideal"), "--range", "0:10"}, kExitInput},
      {{"ml-degree", data("hw.ideal"), "--range", "10:5"}, kExitInput},
      {{"ml-degree", data("hw.ideal"), "--range", "abc"}, kExitInput},
      {{"ml-degree", data("hw.ideal"), "--trials", "0"}, kExitInput},
      {{"ml-degree", data("hw.ideal"), "--seed", "x"}, kExitInput},
      {{"ml-degree", data("rnc3.mat"), "--monomial-cap", "2"}, kExitComputation},
      {{"toric-ideal", data("hw.ideal")}, kExitInput},
      {{"toric-polytope", data("rnc2.mat")}, kExitInput},
      {{"toric-polytope", data("independence.ideal")}, kExitOk},
      {{"scroll"}, kExitInput},
      {{"scroll", "--blocks", "2,0"}, kExitInput},
      {{"groebner", data("hw.ideal"), "--order", "block"}, kExitInput},
      {{"drv", "--arity", "3"}, kExitInput},
      {{"drv", "--arity", "0", "states"}, kExitInput},
      {{"drv", "--arity", "3", "--pmf", "1/2,1/3,1/3", "mean"}, kExitInput},
      {{"drv", "--arity", "2", "--pmf", "1/2,x", "mean"}, kExitInput},
      {{"--format", "xml", "scroll", "--blocks", "4"}, kExitInput},
  };
  for (const auto& c : cases) {
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    CAPTURE(joined);
    const Result r = invoke(c.args);
    CHECK(r.code == c.code);
    if (c.code != kExitOk) {
      CHECK(r.out.empty());
      CHECK_FALSE(r.err.empty());
    }
  }
}

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "treearr/cli.hpp"

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = treearr::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("basic subcommands") {
  CHECK(run({"exponents", "a(b(c))"}).out == "0 1 2\n");
  CHECK(run({"chambers", "a(b,c)"}).out == "4\n");
  CHECK(run({"qform", "a(b(c))"}).out == "(x_a - x_b)(x_a - x_c)(x_b - x_c)\n");
  CHECK(run({"charpoly", "a(b,c)"}).out == "y^3 - 2*y^2 + y\n");
  CHECK(run({"cardpoly", "a(b(c))"}).out == "y^2 + 2*y*z + z^2 + y\n");
  CHECK(run({"gamma", "a(b(c))", "--nodes", "c"}).out == "a(c);b\na;b(c)\n");
  CHECK(run({"algebra-reduce", "a;b;c", "--word", "a-c,b-c"}).out == "0\n");
  CHECK(run({"algebra-reduce", "a;b;c", "--word", "a-b"}).out == "+m[a(b);c]\n");
  CHECK(run({"rho", "a;b;c", "--word", "a-b"}).out == "+1·[a(b);c]*\n");
}

TEST_CASE("certificates") {
  const auto saito = run({"saito-check", "a(b)"});
  CHECK(saito.status == 0);
  CHECK(saito.out.find("pass") != std::string::npos);
  CHECK(saito.out.find("unit = 1") != std::string::npos);
  for (const char* cmd : {"log-check", "duality-check", "relations-check", "chordal-check"}) {
    CHECK(run({cmd, "a(b(c),d)"}).status == 0);
  }
  CHECK(run({"duality-check", "a(b,c)", "--strategy", "grid"}).status == 0);
  CHECK(run({"iso-check", "a;b;c"}).status == 0);
  CHECK(run({"chordal-check", "a(b,c)", "--order", "b,a,c"}).status == 0);
  // Eliminating a first leaves its neighbours b and c, which are not adjacent.
  CHECK(run({"chordal-check", "a(b,c)", "--order", "b,c,a"}).status == 1);
}

TEST_CASE("json output carries a schema") {
  for (const char* cmd : {"exponents", "qform", "saito-check", "lattice", "charpoly", "chambers",
                          "cardpoly", "coproduct", "log-check"}) {
    const auto r = run({cmd, "a(b,c)", "--format", "json"});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == std::string("treearr.") + cmd + "/1");
  }
  const auto j = nlohmann::json::parse(run({"exponents", "a(b(c))", "--format", "json"}).out);
  CHECK(j["exponents"] == nlohmann::json::array({0, 1, 2}));
}

TEST_CASE("dot output") {
  const auto r = run({"lattice", "a(b)", "--format", "dot"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  const auto bad = run({"qform", "a(b)", "--format", "dot"});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("lattice") != std::string::npos);
}

TEST_CASE("usage and parse errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"exponents"}).status == 2);
  CHECK(run({"exponents", "a(b", "--grid-offset", "x"}).status == 2);
  const auto parse = run({"exponents", "a(b"});
  CHECK(parse.status == 2);
  CHECK(parse.err.find("position 3") != std::string::npos);
  CHECK(parse.err.find("grammar") != std::string::npos);
  CHECK(run({"exponents", "a;b"}).status == 2);
  CHECK(run({"gamma", "a(b)", "--nodes", "z"}).status == 2);
  CHECK(run({"gamma", "a(b)", "--nodes", "a"}).status == 2);
  CHECK(run({"sweep", "--max-n", "9"}).status == 2);
  CHECK(run({"coproduct", "a(b)", "--k", "0"}).status == 2);
  CHECK(run({"algebra-reduce", "a;b", "--word", "a-q"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("sweep") {
  const auto small = run({"sweep", "--max-n", "2"});
  CHECK(small.status == 0);
  CHECK(small.out.find("n=2: 2 trees, 3 forests") != std::string::npos);
  CHECK(small.out.find("FAIL") == std::string::npos);
  const auto four = run({"sweep", "--max-n", "4", "--format", "json"});
  CHECK(four.status == 0);
  const auto j = nlohmann::json::parse(four.out);
  CHECK(j["tree_counts"] == nlohmann::json::array({1, 2, 9, 64}));
  CHECK(j["forest_counts"] == nlohmann::json::array({1, 3, 16, 125}));
  for (const auto& p : j["properties"]) CHECK(p["status"] == "pass");
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"lattice", "a(b(c),d)", "--format", "json"},
           {"coproduct", "a(b,c);d", "--k", "3"},
           {"saito-check", "a(b(c),d)", "--format", "json"},
           {"iso-check", "a;b;c", "--format", "json"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

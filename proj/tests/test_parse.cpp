#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "n2p/families.hpp"
#include "n2p/parse.hpp"
#include "support/generators.hpp"

using namespace n2p;

TEST_CASE("parse_ideal grammar") {
  auto I = parse_ideal("vars: x y z\ngens: x^2, y*z");
  REQUIRE(I.vars().names() == std::vector<std::string>{"x", "y", "z"});
  REQUIRE(I.gens().size() == 2);
  REQUIRE(I.gens()[0].str(I.vars()) == "x^2");
  REQUIRE(I.gens()[1].str(I.vars()) == "y*z");

  // comments, odd whitespace, repeated factors
  auto J = parse_ideal(
      "# a comment\nvars: x y # trailing\n gens:\n   x * x , x^1*y\n");
  REQUIRE(J == parse_ideal("vars: x y\ngens: x^2, x*y"));

  // empty generator list is the zero ideal
  auto Z = parse_ideal("vars: a b\ngens:");
  REQUIRE(Z.is_zero());

  // minimalization happens at parse time
  auto M = parse_ideal("vars: x y\ngens: x*y, x^2*y");
  REQUIRE(M.gens().size() == 1);
}

TEST_CASE("parse_ideal errors") {
  REQUIRE_THROWS_AS(parse_ideal("gens: x*y"), ParseError);
  REQUIRE_THROWS_AS(parse_ideal("vars:\ngens: x"), ParseError);
  REQUIRE_THROWS_AS(parse_ideal("vars: x\ngens: y"), UnknownVariable);
  REQUIRE_THROWS_AS(parse_ideal("vars: x\ngens: x^0"), GeneratorIsUnit);
  REQUIRE_THROWS_AS(parse_ideal("vars: x\ngens: x,"), ParseError);
  REQUIRE_THROWS_AS(parse_ideal("vars: x\ngens: x x"), ParseError);
  REQUIRE_THROWS_AS(parse_ideal("vars: x\ngens: x^"), ParseError);

  try {
    parse_ideal("vars: x y\ngens: x @ y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line == 2);
  }
}

TEST_CASE("parse_graph grammar") {
  auto g = parse_graph("vertices: a b c\nedges: a-b, b-c");
  REQUIRE(g.vertices().size() == 3);
  REQUIRE(g.adjacent(0, 1));
  REQUIRE(g.adjacent(1, 2));
  REQUIRE_FALSE(g.adjacent(0, 2));

  auto lone = parse_graph("vertices: a b\nedges:");
  REQUIRE(lone.edges().empty());
}

TEST_CASE("parse_graph errors") {
  REQUIRE_THROWS_AS(parse_graph("vertices: a\nedges: a-a"), SelfLoop);
  REQUIRE_THROWS_AS(parse_graph("vertices: a b\nedges: a-b, b-a"), DuplicateEdge);
  REQUIRE_THROWS_AS(parse_graph("vertices: a b\nedges: a-c"), UnknownVariable);
  REQUIRE_THROWS_AS(parse_graph("vertices: a b\nedges: a b"), ParseError);
  REQUIRE_THROWS_AS(parse_graph("vertices:\nedges:"), ParseError);
}

TEST_CASE("round trips") {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    auto I = n2p_tests::random_quadratic_ideal(rng);
    std::string s = print_ideal(I);
    REQUIRE(parse_ideal(s) == I);
    REQUIRE(print_ideal(parse_ideal(s)) == s);

    auto g = n2p_tests::random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.5);
    std::string t = print_graph(g);
    REQUIRE(parse_graph(t) == g);
    REQUIRE(print_graph(parse_graph(t)) == t);
  }
}

TEST_CASE("canonical generator order in printed output") {
  auto I = parse_ideal("vars: x0 x1 x2 x3\ngens: x1*x3, x0*x2");
  REQUIRE(print_ideal(I) == "vars: x0 x1 x2 x3\ngens: x0*x2, x1*x3\n");
  REQUIRE(print_graph(cycle_graph(4)) ==
          "vertices: v0 v1 v2 v3\nedges: v0-v1, v0-v3, v1-v2, v2-v3\n");
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "n2p/engine.hpp"
#include "n2p/families.hpp"
#include "n2p/parse.hpp"
#include "support/generators.hpp"

using namespace n2p;
using n2p_tests::random_quadratic_ideal;

namespace {
const std::vector<FieldSpec> kFields = {
    FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
}

TEST_CASE("n2p_quadratic on the core examples") {
  REQUIRE(n2p_quadratic(cycle_ideal(4)) == N2pIndex::finite(1));
  REQUIRE(n2p_quadratic(cycle_ideal(5)) == N2pIndex::finite(2));
  REQUIRE(n2p_quadratic(cycle_ideal(8)) == N2pIndex::finite(5));

  REQUIRE(n2p_quadratic(parse_ideal("vars: x y z\ngens: x^2, y*z")) ==
          N2pIndex::finite(1));
  REQUIRE(n2p_quadratic(parse_ideal("vars: x y z\ngens: x^2, y^2")) ==
          N2pIndex::finite(1));
  REQUIRE(n2p_quadratic(parse_ideal("vars: x y\ngens: x^2, x*y")) ==
          N2pIndex::two_regular());
  REQUIRE(n2p_quadratic(parse_ideal("vars: x y\ngens: x^2, x*y, y^2")) ==
          N2pIndex::two_regular());
  REQUIRE(n2p_quadratic(parse_ideal("vars: x y\ngens: x^3")) ==
          N2pIndex::not_quadratic());
  REQUIRE(n2p_quadratic(parse_ideal("vars: x y\ngens: x, y^2")) ==
          N2pIndex::not_quadratic());
}

TEST_CASE("n2p_squarefree") {
  REQUIRE(n2p_squarefree(clique_complex(cycle_graph(6))) == N2pIndex::finite(3));
  REQUIRE(n2p_squarefree(SimplicialComplex::simplex(n2p_tests::var_set(4))) ==
          N2pIndex::two_regular());
  // hollow triangle is not a clique complex: its SR ideal needs a cubic
  SimplicialComplex hollow(VariableSet({"x", "y", "z"}), {0b011, 0b101, 0b110});
  REQUIRE(n2p_squarefree(hollow) == N2pIndex::not_quadratic());
}

TEST_CASE("failure_witness") {
  auto w5 = failure_witness(cycle_ideal(5));
  REQUIRE(w5);
  REQUIRE(w5->kind == FailureWitness::Kind::Hole);
  REQUIRE(w5->hole.length() == 5);
  REQUIRE(w5->verify(cycle_ideal(5)));

  auto I = parse_ideal("vars: x y z\ngens: x^2, y*z");  // link of x is 2 points
  auto wi = failure_witness(I);
  REQUIRE(wi);
  REQUIRE(wi->kind == FailureWitness::Kind::LinkNotSimplex);
  REQUIRE(wi->verify(I));

  auto J = parse_ideal("vars: x y\ngens: x^2, y^2");  // adjacent square vertices
  auto wj = failure_witness(J);
  REQUIRE(wj);
  REQUIRE(wj->kind == FailureWitness::Kind::SquareVertexInLink);
  REQUIRE(wj->verify(J));

  auto K = parse_ideal("vars: x y\ngens: x*y^2");
  auto wk = failure_witness(K);
  REQUIRE(wk);
  REQUIRE(wk->kind == FailureWitness::Kind::NonQuadraticGenerator);
  REQUIRE(wk->verify(K));

  REQUIRE_FALSE(failure_witness(parse_ideal("vars: x y\ngens: x^2, x*y")));
}

TEST_CASE("witness present iff not 2-regular") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 150; ++trial) {
    auto I = random_quadratic_ideal(rng);
    auto w = failure_witness(I);
    REQUIRE(w.has_value() == !is_two_regular(I));
    if (w) REQUIRE(w->verify(I));
  }
}

TEST_CASE("cross_check agrees on the cycle family") {
  for (int n = 4; n <= 7; ++n) {
    auto r = cross_check(cycle_ideal(n), kFields);
    REQUIRE(r.agree);
    REQUIRE(r.combinatorial == N2pIndex::finite(n - 3));
    REQUIRE(r.witness);
    REQUIRE(r.witness->hole.length() == n);
    for (const auto& fr : r.oracle) {
      REQUIRE(fr.hochster_index == r.combinatorial);
      REQUIRE(fr.koszul_index == r.combinatorial);
    }
  }
}

TEST_CASE("cross_check agrees on random quadratic ideals") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    auto I = random_quadratic_ideal(rng, 5);
    if (I.is_zero()) continue;
    auto r = cross_check(I, kFields);
    REQUIRE(r.agree);
  }
}

TEST_CASE("sections through a hole recover the cycle index") {
  // restricting the 7-cycle ideal to the hole vertices gives the 7-cycle back
  auto I = cycle_ideal(7);
  auto w = failure_witness(I);
  REQUIRE(w);
  std::vector<std::string> keep;
  for (int v : w->hole.vertices) keep.push_back(I.vars().name(v));
  auto S = coordinate_section(I, keep);
  REQUIRE(n2p_quadratic(S) == N2pIndex::finite(static_cast<int>(keep.size()) - 3));
}

TEST_CASE("is_two_regular equals regularity 2 on nonzero quadratic ideals") {
  std::mt19937 rng(73);
  int seen = 0;
  for (int trial = 0; trial < 60 && seen < 40; ++trial) {
    auto I = random_quadratic_ideal(rng, 5);
    if (I.is_zero()) continue;
    ++seen;
    auto t = betti_table_general(I, FieldSpec::rationals());
    if (n2p_quadratic(I).is_not_quadratic()) continue;
    REQUIRE(is_two_regular(I) == (regularity(t) == 2));
  }
}

#include <doctest.h>

#include <random>

#include "burnside/simples.hpp"

using namespace burnside;

TEST_CASE("census sizes at p=3") {
  BisetContext ctx(3);
  Simples sim(ctx);
  // cyclic (p-1), rank two (p-1), whole p(p-1), trivial
  CHECK(sim.census(ctx.E()).size() == 11);
  // cyclic (p-1), whole p(p-1), trivial
  CHECK(sim.census(ctx.A()).size() == 9);
}

TEST_CASE("reference modules over E have the listed dimensions") {
  BisetContext ctx(3);
  Simples sim(ctx);
  CHECK(sim.reference(Q_type(0)).dim == 4);
  CHECK(sim.reference(Q_type(1)).dim == 2);
  CHECK(sim.reference(A_type(0)).dim == 4);
  CHECK(sim.reference(A_type(1)).dim == 4);
  CHECK(sim.reference(E_type(2, 1)).dim == 3);
  CHECK(sim.reference(trivial_min()).dim == 1);
}

TEST_CASE("rank-two and cyclic types of equal dimension are not isomorphic") {
  BisetContext ctx(3);
  Simples sim(ctx);
  CHECK_FALSE(iso_test(sim.reference(A_type(0)), sim.reference(Q_type(0))));
  CHECK_FALSE(iso_test(sim.reference(A_type(1)), sim.reference(Q_type(0))));
}

TEST_CASE("S^i det^q of A with i < p-1 does not reach E") {
  BisetContext ctx(3);
  Simples sim(ctx);
  CHECK(sim.rank_two_value(0, 0).dim == 0);
  CHECK(sim.rank_two_value(1, 1).dim == 0);
  CHECK(sim.rank_two_value(2, 0).dim == 4);
}

TEST_CASE("identify finds a reference among the census") {
  BisetContext ctx(3);
  Simples sim(ctx);
  auto id = sim.identify(sim.reference(E_type(1, 1)), ctx.E());
  REQUIRE(id);
  CHECK(*id == E_type(1, 1));
}

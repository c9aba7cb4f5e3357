#include <doctest.h>

#include "burnside/fp.hpp"

using namespace burnside;

TEST_CASE("scalar arithmetic mod 5") {
  FpScalar a(3, 5), b(4, 5);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 2);
  CHECK((a / b) * b == a);
  CHECK(a.inverse().value() == 2);
  CHECK((-a).value() == 2);
  CHECK(a.pow(4).value() == 1);
  CHECK_THROWS(FpScalar(1, 3) + FpScalar(1, 5));
}

TEST_CASE("odd primes only") {
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(7));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(9));
  CHECK_THROWS(require_odd_prime(4));
}

TEST_CASE("rref, rank and nullspace") {
  auto m = FpMatrix::from_rows(3, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
  // second row is twice the first mod 3
  CHECK(rank(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.rows() == 1);
  CHECK((m * ns.transpose()).is_zero());
  auto r = rref(m);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 2});
}

TEST_CASE("subspace sum, intersection and membership") {
  auto u = FpMatrix::from_rows(5, {{1, 0, 0}, {0, 1, 0}});
  auto v = FpMatrix::from_rows(5, {{0, 1, 0}, {0, 0, 1}});
  CHECK(rank(subspace_sum(u, v)) == 3);
  auto i = subspace_intersect(u, v);
  REQUIRE(i.rows() == 1);
  CHECK(subspace_equal(i, FpMatrix::from_rows(5, {{0, 3, 0}})));
  Subspace s(u);
  CHECK(s.contains(std::vector<std::uint8_t>{2, 4, 0}));
  CHECK_FALSE(s.contains(std::vector<std::uint8_t>{0, 0, 1}));
  auto c = s.coordinates({2, 4, 0});
  REQUIRE(c);
  CHECK(*c == std::vector<std::uint8_t>{2, 4});
}

TEST_CASE("left solver handles dependent rows") {
  auto b = FpMatrix::from_rows(3, {{1, 1}, {2, 2}, {0, 1}});
  LeftSolver ls(b);
  CHECK(ls.rank() == 2);
  auto c = ls.solve({1, 2});
  REQUIRE(c);
  CHECK(row_times(*c, b) == std::vector<std::uint8_t>{1, 2});
}

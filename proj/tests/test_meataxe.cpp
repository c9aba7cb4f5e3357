#include <doctest.h>

#include <random>

#include "burnside/meataxe.hpp"
#include "burnside/simples.hpp"

using namespace burnside;

namespace {

Module cyclic_regular(int p) {
  FpMatrix g(p, static_cast<std::size_t>(p), static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) g.set(static_cast<std::size_t>(k), static_cast<std::size_t>((k + 1) % p), 1);
  return make_module(p, static_cast<std::size_t>(p), {g});
}

Module sym_module(int p, int i, int q) {
  auto gens = gl2_generators(p);
  return make_module(p, static_cast<std::size_t>(i + 1), {sym_power(gens[0], i, q, p), sym_power(gens[1], i, q, p)});
}

}  // namespace

TEST_CASE("regular module of C_p is uniserial with trivial factors") {
  for (int p : {3, 5}) {
    auto fs = chop(cyclic_regular(p), 7);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].module.dim == 1);
    CHECK(fs[0].multiplicity == p);
  }
}

TEST_CASE("symmetric powers S^i, i <= p-1, are irreducible for GL_2") {
  std::mt19937_64 rng(3);
  for (int p : {3, 5})
    for (int i = 0; i <= p - 1; ++i) CHECK(is_irreducible(sym_module(p, i, 0), rng));
}

TEST_CASE("determinant twists are distinguished") {
  const int p = 5;
  auto a = sym_module(p, 2, 0);
  auto b = sym_module(p, 2, 1);
  CHECK(iso_test(a, a));
  CHECK_FALSE(iso_test(a, b));
  CHECK(hom_dim(a, a) == 1);
  CHECK(hom_dim(a, b) == 0);
}

TEST_CASE("chop of a direct sum recovers both summands") {
  const int p = 3;
  auto a = sym_module(p, 1, 0);
  auto b = sym_module(p, 2, 1);
  std::vector<FpMatrix> gens;
  for (std::size_t k = 0; k < 2; ++k) {
    FpMatrix g(p, 5, 5);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) g.set(r, c, a.gens[k].at(r, c));
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) g.set(2 + r, 2 + c, b.gens[k].at(r, c));
    gens.push_back(g);
  }
  auto fs = chop(make_module(p, 5, gens), 11);
  REQUIRE(fs.size() == 2);
  std::size_t total = 0;
  for (const auto& f : fs) total += f.module.dim * static_cast<std::size_t>(f.multiplicity);
  CHECK(total == 5);
}

TEST_CASE("sym_power is multiplicative") {
  const int p = 5;
  auto els = gl2_elements(p);
  const Mat2& g = els[11];
  const Mat2& h = els[203];
  CHECK(sym_power(g, 3, 2, p) * sym_power(h, 3, 2, p) == sym_power(mat2_mul(g, h, p), 3, 2, p));
}

#include <doctest.h>

#include "burnside/biset.hpp"

using namespace burnside;

TEST_CASE("small biset spaces") {
  BisetContext ctx(3);
  CHECK(ctx.space(ctx.Q(), ctx.Q()).dim() == 4);
  CHECK(ctx.space(ctx.one(), ctx.one()).dim() == 1);
  // A(1,G): a single class
  CHECK(ctx.space(ctx.one(), ctx.E()).dim() == 1);
}

TEST_CASE("identity is a two-sided unit") {
  BisetContext ctx(3);
  const auto& s = ctx.space(ctx.A(), ctx.A());
  auto one = ctx.identity(ctx.A());
  for (std::size_t c = 0; c < s.dim(); ++c) {
    auto z = ctx.basis(ctx.A(), ctx.A(), static_cast<int>(c));
    CHECK(ctx.mul(one, z) == z);
    CHECK(ctx.mul(z, one) == z);
  }
}

TEST_CASE("J(A) has codimension |GL_2|") {
  BisetContext ctx(3);
  const auto& s = ctx.space(ctx.A(), ctx.A());
  CHECK(s.dim() - ctx.ideal_classes(ctx.A()).size() == 48);
  CHECK(ctx.out_classes(ctx.A()).size() == 48);
}

TEST_CASE("iota is multiplicative and pi inverts it") {
  BisetContext ctx(3);
  auto els = gl2_elements(3);
  const Mat2& a = els[5];
  const Mat2& b = els[17];
  CHECK(ctx.mul(ctx.iota(ctx.E(), a), ctx.iota(ctx.E(), b)) == ctx.iota(ctx.E(), mat2_mul(a, b, 3)));
  auto w = ctx.pi(ctx.iota(ctx.A(), a));
  CHECK(w[static_cast<std::size_t>(gl2_index(a, 3))] == 1);
}

TEST_CASE("the action family generates A_p(A,A)") {
  BisetContext ctx(3);
  CHECK(generated_algebra_dim(ctx, ctx.action_family(ctx.A())) == ctx.space(ctx.A(), ctx.A()).dim());
}

#include <doctest.h>

#include "burnside/cohomology.hpp"
#include "burnside/closed_forms.hpp"

using namespace burnside;

TEST_CASE("first dimensions of H^{2n}(E) at p=3") {
  BisetContext ctx(3);
  Cohomology coh(ctx);
  std::vector<std::size_t> dims;
  for (int n = 0; n <= 4; ++n) dims.push_back(coh.he_basis(n).dim());
  CHECK(dims == std::vector<std::size_t>{1, 2, 4, 5, 6});
}

TEST_CASE("ring relations of H*(E)") {
  for (int p : {3, 5}) {
    BisetContext ctx(p);
    Cohomology c(ctx);
    CHECK(c.y1().pow(p) * c.y2() == c.y1() * c.y2().pow(p));
    CHECK(c.C() * c.y1() == c.y1().pow(p));
    CHECK(c.V() == c.v().pow(p - 1));
    CHECK(c.D1() == c.C().pow(p) + c.V());
    CHECK(c.D2() == c.C() * c.V());
  }
}

TEST_CASE("restriction and transfer satisfy Frobenius reciprocity") {
  BisetContext ctx(3);
  Cohomology c(ctx);
  CohClass x = c.y1() * c.y2() + c.C();
  CohClass f = c.au().pow(3);
  for (std::size_t fr = 0; fr < ctx.E().frames().size(); ++fr)
    CHECK(c.transfer(fr, c.restrict_to_frame(x, fr) * f) == x * c.transfer(fr, f));
}

TEST_CASE("the quotient map pulls y, u back to y1, y2") {
  BisetContext ctx(3);
  Cohomology c(ctx);
  CHECK(c.pullback(c.quotient_map(), c.ay()) == c.y1());
  CHECK(c.pullback(c.quotient_map(), c.au()) == c.y2());
}

TEST_CASE("identity biset acts trivially") {
  BisetContext ctx(3);
  Cohomology c(ctx);
  CohClass x = c.monomial(1, 2, 1, 0);
  CHECK(c.act(ctx.identity(ctx.E()), x) == x);
}

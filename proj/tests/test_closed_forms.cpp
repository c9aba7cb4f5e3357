#include <doctest.h>

#include "burnside/closed_forms.hpp"

using namespace burnside;

namespace {

const ClosedForm& find(const std::vector<ClosedForm>& cfs, const SimpleId& id) {
  for (const auto& cf : cfs)
    if (cf.id == id) return cf;
  throw std::runtime_error("missing closed form");
}

}  // namespace

TEST_CASE("ten positive-degree summands at p=3") { CHECK(closed_forms(3, 10).size() == 10); }

TEST_CASE("trivial summand is DA^+") {
  auto s = find(closed_forms(3, 16), E_type(0, 0)).series;
  // first nonzero at weights 6 and 8
  for (int n = 0; n < 6; ++n) CHECK(s[static_cast<std::size_t>(n)] == 0);
  CHECK(s[6] == 1);
  CHECK(s[7] == 0);
  CHECK(s[8] == 1);
  CHECK(s[12] == 1);
  CHECK(s[14] == 1);
  CHECK(s[16] == 1);
}

TEST_CASE("cyclic summand for U_1 starts with S^1") {
  auto s = find(closed_forms(3, 5), Q_type(1)).series;
  CHECK(s[1] == 2);
  CHECK(s[2] == 0);
  CHECK(s[3] == 2);
}

TEST_CASE("rank-two summand X(E,A,0) starts at D2 C^0 M_0") {
  // D2 has weight p^2-1 = 8 and F_p C + S^2 has weight 2 and dim 4
  auto s = find(closed_forms(3, 12), A_type(0)).series;
  for (int n = 0; n < 10; ++n) CHECK(s[static_cast<std::size_t>(n)] == 0);
  CHECK(s[10] == 4);
}

TEST_CASE("twisted table branches") {
  // p=7: (i,q) = (3,0): 2i = 6 == 0, (1,0): 2 != 0, (2,2): 3i = 6 == 0, (1,1): 3 != 0
  CHECK(twisted_row(3, 0, 7) == 0);
  CHECK(twisted_row(1, 0, 7) == 1);
  CHECK(twisted_row(2, 2, 7) == 2);
  CHECK(twisted_row(1, 1, 7) == 3);
  CHECK(twisted_row(1, 4, 7) == 4);
  CHECK(twisted_row(1, 2, 7) == 5);
  CHECK_THROWS(twisted_row(0, 0, 7));
}

TEST_CASE("dimension series agrees with the monomial count at p=5") {
  const int p = 5;
  auto s = hilbert_series_E(p, 30);
  for (int n = 0; n <= 30; ++n) {
    long long count = 0;
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        if (a == p - 1 && b == p - 1) continue;
        for (int c = 0; a + b + (p - 1) * c <= n; ++c)
          if ((n - a - b - (p - 1) * c) % p == 0) ++count;
      }
    CHECK(s[static_cast<std::size_t>(n)] == count);
  }
}

#include <doctest.h>

#include <algorithm>

#include "burnside/group.hpp"

using namespace burnside;

TEST_CASE("extraspecial group of order 27") {
  auto e = Group::extraspecial(3);
  CHECK(e->order() == 27);
  // trivial, 13 of order 3, 4 of order 9, whole
  CHECK(e->subgroups().size() == 19);
  CHECK(e->frames().size() == 4);
  CHECK(e->subgroup(e->center()).order() == 3);
  // (i,j,k)(i',j',k') = (i+i', j+j', k+k'+ij')
  int b = e->index({0, 1, 0});
  int a = e->index({1, 0, 0});
  CHECK(e->element(e->mul(a, b)) == GroupElement{1, 1, 1});
  CHECK(e->element(e->mul(b, a)) == GroupElement{1, 1, 0});
  for (int x = 0; x < e->order(); ++x) CHECK(e->pow(x, 3) == e->identity());
}

TEST_CASE("frames of E are labelled A0..A(p-1), Ainf") {
  auto e = Group::extraspecial(5);
  std::vector<std::string> labels;
  for (const auto& f : e->frames()) labels.push_back(f.label);
  CHECK(labels == std::vector<std::string>{"A0", "A1", "A2", "A3", "A4", "Ainf"});
  for (const auto& f : e->frames()) CHECK(f.rank == 2);
}

TEST_CASE("GL_2 has (p^2-1)(p^2-p) elements and the two generators generate it") {
  const int p = 3;
  auto els = gl2_elements(p);
  CHECK(els.size() == 48);
  auto gens = gl2_generators(p);
  std::vector<Mat2> seen{Mat2{}};
  for (std::size_t k = 0; k < seen.size(); ++k)
    for (const auto& g : gens) {
      Mat2 h = mat2_mul(seen[k], g, p);
      if (std::find(seen.begin(), seen.end(), h) == seen.end()) seen.push_back(h);
    }
  CHECK(seen.size() == 48);
}

TEST_CASE("automorphism lifts induce the given matrix on E/Z") {
  auto e = Group::extraspecial(3);
  for (const Mat2& g : gl2_elements(3)) {
    Hom h = out_lift(*e, g);
    CHECK(is_homomorphism(h));
    CHECK(h.injective());
    CHECK(induced_matrix(h) == g);
  }
}

TEST_CASE("homomorphisms E -> Q") {
  auto e = Group::extraspecial(3);
  auto q = Group::cyclic(3);
  // Hom(E, C_3) = Hom(E/Z, C_3), which has p^2 elements
  CHECK(enumerate_homs(*e, e->whole(), *q).size() == 9);
}

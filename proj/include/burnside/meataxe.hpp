#ifndef BURNSIDE_MEATAXE_HPP
#define BURNSIDE_MEATAXE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "burnside/fp.hpp"

namespace burnside {

// Finite-dimensional right module: row vectors, v -> v * gens[k].
struct Module {
  int p = 3;
  std::size_t dim = 0;
  std::vector<FpMatrix> gens;
};

Module make_module(int p, std::size_t dim, std::vector<FpMatrix> gens);
bool is_invariant(const Module& m, const FpMatrix& rows);
// smallest invariant subspace containing the rows, rref
FpMatrix spin(const Module& m, const FpMatrix& seeds);
// action on an invariant subspace, in the rref basis of `basis`
Module submodule(const Module& m, const FpMatrix& basis);
Module quotient(const Module& m, const FpMatrix& basis);
// upper / lower, both invariant, lower inside upper
Module subquotient(const Module& m, const FpMatrix& upper, const FpMatrix& lower);
// same module with the dual (transposed) action
Module dual(const Module& m);

// Norton test. Returns a proper nonzero invariant subspace, or nullopt when
// the module is irreducible.
std::optional<FpMatrix> proper_submodule(const Module& m, std::mt19937_64& rng);
bool is_irreducible(const Module& m, std::mt19937_64& rng);

// composition factors, isomorphic ones merged
struct Factor {
  Module module;
  int multiplicity = 0;
};
std::vector<Factor> chop(const Module& m, std::uint64_t seed);

// true iff there is an invertible X with g1 X = X g2 for every generator;
// both modules must be irreducible
bool iso_test(const Module& a, const Module& b);
// dimension of Hom(a, b) as right modules
std::size_t hom_dim(const Module& a, const Module& b);

}  // namespace burnside

#endif

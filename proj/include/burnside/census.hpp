#ifndef BURNSIDE_CENSUS_HPP
#define BURNSIDE_CENSUS_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "burnside/cohomology.hpp"
#include "burnside/simples.hpp"

namespace burnside {

struct IdentifiedFactor {
  std::optional<SimpleId> id;  // nullopt: matches nothing in the census
  std::size_t dim = 0;
  int multiplicity = 0;
};

// Composition factors of a module, each matched against the census of g.
std::vector<IdentifiedFactor> identify_factors(const Simples& sim, const Group& g, const Module& m, std::uint64_t seed);
int multiplicity_of(const std::vector<IdentifiedFactor>& fs, const SimpleId& id);
// same factors with the same multiplicities
bool same_factors(const std::vector<IdentifiedFactor>& a, const std::vector<IdentifiedFactor>& b);

struct WeightCensus {
  int weight = 0;
  std::size_t dim = 0;
  std::vector<IdentifiedFactor> factors;
};

// Per-weight factor lists of H^{2n}(G) under the generator family of A_p(G,G).
class Census {
 public:
  Census(const Cohomology& coh, const Simples& sim);

  const Cohomology& coh() const { return *coh_; }
  const Simples& simples() const { return *sim_; }

  // H^{2n}(G) with the family action, in the piece basis
  Module cohomology_module(const Group& g, int n) const;
  // invariant tuple subspace (rows) of H^{2n}(G) as a module; lower may be empty
  Module slice_module(const Group& g, int n, const FpMatrix& upper, const FpMatrix& lower) const;
  const WeightCensus& at(const Group& g, int n, std::uint64_t seed) const;

  // multiplicity of id in H^{2n}(E) times its dimension, n = 0..n_max (weight 0 excluded)
  std::vector<long long> summand_hilbert(const SimpleId& id, int n_max, std::uint64_t seed) const;

 private:
  const Cohomology* coh_;
  const Simples* sim_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<const Group*, int, std::uint64_t>, WeightCensus> cache_;
};

}  // namespace burnside

#endif

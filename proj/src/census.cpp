#include "burnside/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace burnside {

std::vector<IdentifiedFactor> identify_factors(const Simples& sim, const Group& g, const Module& m, std::uint64_t seed) {
  std::vector<IdentifiedFactor> out;
  if (m.dim == 0) return out;
  for (auto& f : chop(m, seed)) {
    auto id = sim.identify(f.module, g);
    // isomorphic factors were merged by chop, so ids are distinct unless unknown
    out.push_back(IdentifiedFactor{id, f.module.dim, f.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const IdentifiedFactor& a, const IdentifiedFactor& b) {
    if (a.id.has_value() != b.id.has_value()) return a.id.has_value();
    if (a.id && b.id && !(*a.id == *b.id)) return *a.id < *b.id;
    return a.dim < b.dim;
  });
  return out;
}

int multiplicity_of(const std::vector<IdentifiedFactor>& fs, const SimpleId& id) {
  int m = 0;
  for (const auto& f : fs)
    if (f.id && *f.id == id) m += f.multiplicity;
  return m;
}

bool same_factors(const std::vector<IdentifiedFactor>& a, const std::vector<IdentifiedFactor>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].id.has_value() != b[k].id.has_value()) return false;
    if (a[k].id && !(*a[k].id == *b[k].id)) return false;
    if (a[k].dim != b[k].dim || a[k].multiplicity != b[k].multiplicity) return false;
  }
  return true;
}

Census::Census(const Cohomology& coh, const Simples& sim) : coh_(&coh), sim_(&sim) {}

Module Census::cohomology_module(const Group& g, int n) const {
  const GradedPiece& gp = coh_->piece(g, n);
  return Module{coh_->p(), gp.dim(), coh_->action_matrices(g, n, sim_->family(g))};
}

Module Census::slice_module(const Group& g, int n, const FpMatrix& upper, const FpMatrix& lower) const {
  Module whole = cohomology_module(g, n);
  FpMatrix up = coh_->coordinates(g, n, upper);
  FpMatrix low = lower.empty() ? FpMatrix(coh_->p(), 0, whole.dim) : coh_->coordinates(g, n, lower);
  if (!is_invariant(whole, up)) throw std::logic_error("upper subspace is not a submodule");
  if (!low.empty() && !is_invariant(whole, low)) throw std::logic_error("lower subspace is not a submodule");
  return subquotient(whole, up, low);
}

const WeightCensus& Census::at(const Group& g, int n, std::uint64_t seed) const {
  auto key = std::make_tuple(&g, n, seed);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Module m = cohomology_module(g, n);
  WeightCensus wc{n, m.dim, identify_factors(*sim_, g, m, seed + static_cast<std::uint64_t>(n))};
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(wc)).first->second;
}

std::vector<long long> Census::summand_hilbert(const SimpleId& id, int n_max, std::uint64_t seed) const {
  std::vector<long long> out(static_cast<std::size_t>(n_max + 1), 0);
  const Group& g = id.over_E ? coh_->ctx().E() : coh_->ctx().A();
  for (int n = 1; n <= n_max; ++n)
    out[static_cast<std::size_t>(n)] =
        static_cast<long long>(multiplicity_of(at(g, n, seed).factors, id)) * id.expected_dim(coh_->p());
  return out;
}

}  // namespace burnside

#include "burnside/subspaces.hpp"

#include <functional>
#include <stdexcept>

namespace burnside {

Subspaces::Subspaces(const Cohomology& coh) : coh_(&coh) {}

std::vector<CohClass> Subspaces::S(int i) const {
  std::vector<CohClass> out;
  for (int t = 0; t <= i; ++t) out.push_back(coh_->monomial(i - t, t, 0, 0));
  return out;
}

std::vector<CohClass> Subspaces::T(int i) const {
  const int q = p();
  if (i < 0 || i > q - 2) throw std::invalid_argument("T^i needs 0 <= i <= p-2");
  std::vector<CohClass> out;
  for (int t = 0; t <= q - 1 - i; ++t) out.push_back(coh_->monomial(q - 1 - t, i + t, 0, 0));
  return out;
}

std::vector<CohClass> Subspaces::M(int i) const { return join(times(coh_->C(), S(i)), T(i)); }

std::vector<CohClass> Subspaces::N(int i) const {
  std::vector<CohClass> out;
  auto m = M(i);
  for (int j = 0; j < p(); ++j) out = join(out, times(coh_->C().pow(j), m));
  return out;
}

std::vector<CohClass> Subspaces::scalars() const { return {coh_->one(coh_->ctx().E())}; }

std::vector<CohClass> Subspaces::times(const CohClass& a, const std::vector<CohClass>& xs) {
  std::vector<CohClass> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(a * x);
  return out;
}

std::vector<CohClass> Subspaces::join(std::vector<CohClass> a, const std::vector<CohClass>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const Group& Subspaces::group_of(Ring r) const {
  switch (r) {
    case Ring::A_DA:
    case Ring::A_D1:
    case Ring::A_full:
      return coh_->ctx().A();
    default:
      return coh_->ctx().E();
  }
}

std::vector<CohClass> Subspaces::ring_gens(Ring r) const {
  const Cohomology& c = *coh_;
  switch (r) {
    case Ring::scalars:
      return {};
    case Ring::CA:
      return {c.C(), c.V()};
    case Ring::DA:
      return {c.D1(), c.D2()};
    case Ring::C:
      return {c.C()};
    case Ring::V:
      return {c.V()};
    case Ring::D1:
      return {c.D1()};
    case Ring::A_DA:
      return {c.D1_tilde(), c.D2_tilde()};
    case Ring::A_D1:
      return {c.D1_tilde()};
    case Ring::A_full:
      return {c.ay(), c.au()};
  }
  return {};
}

std::size_t Subspaces::width(Ring r, int n) const { return coh_->model(group_of(r)).width(n); }

const std::vector<CohClass>& Subspaces::ring_monomials(Ring r, int n) const {
  auto key = std::make_pair(r, n);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = monos_.find(key);
    if (it != monos_.end()) return it->second;
  }
  std::vector<CohClass> out;
  if (n == 0) {
    out.push_back(coh_->one(group_of(r)));
  } else if (n > 0) {
    // exponents are chosen generator by generator, so each monomial appears once
    auto gens = ring_gens(r);
    std::function<void(std::size_t, int, CohClass)> rec = [&](std::size_t k, int left, CohClass acc) {
      if (left == 0) {
        out.push_back(acc);
        return;
      }
      if (k == gens.size()) return;
      rec(k + 1, left, acc);
      if (gens[k].weight <= left) rec(k, left - gens[k].weight, acc * gens[k]);
    };
    rec(0, n, coh_->one(group_of(r)));
  }
  std::lock_guard<std::mutex> lock(mu_);
  return monos_.emplace(key, std::move(out)).first->second;
}

FpMatrix Subspaces::slice(const Span& s, int n) const {
  FpMatrix m(p(), 0, width(s.ring, n));
  for (const auto& g : s.gens) {
    if (g.weight > n) continue;
    if (g.model != &coh_->model(group_of(s.ring))) throw std::invalid_argument("span generator lives on the wrong group");
    for (const auto& r : ring_monomials(s.ring, n - g.weight)) m.append_row((r * g).v);
  }
  return row_basis(m);
}

FpMatrix Subspaces::slice(const std::vector<Span>& ss, int n) const {
  if (ss.empty()) throw std::invalid_argument("empty span list");
  FpMatrix m(p(), 0, width(ss.front().ring, n));
  for (const auto& s : ss) m.append_rows(slice(s, n));
  return row_basis(m);
}

FpMatrix Subspaces::named(const std::string& name, int i, int n) const {
  if (name == "S") return slice(Span{Ring::scalars, S(i)}, n);
  if (name == "T") return slice(Span{Ring::scalars, T(i)}, n);
  if (name == "M") return slice(Span{Ring::scalars, M(i)}, n);
  if (name == "N") return slice(Span{Ring::scalars, N(i)}, n);
  if (name == "CA") return slice(Span{Ring::CA, scalars()}, n);
  if (name == "DA") return slice(Span{Ring::DA, scalars()}, n);
  throw std::invalid_argument("unknown subspace name " + name);
}

std::vector<std::pair<std::string, std::vector<Span>>> Subspaces::stable_families() const {
  const Cohomology& c = *coh_;
  const int q = p();
  std::vector<std::pair<std::string, std::vector<Span>>> out;
  out.push_back({"CA{1+S^(p-1)}", {Span{Ring::CA, join(scalars(), S(q - 1))}}});
  for (int i = 1; i <= q - 2; ++i) {
    CohClass vi = c.v().pow(i);
    auto gens = join(join(S(i), T(i)), {vi});
    gens = join(gens, times(vi, S(q - 1)));
    out.push_back({"CA{S^" + std::to_string(i) + "+T^" + std::to_string(i) + "+v^" + std::to_string(i) + "+v^" +
                       std::to_string(i) + "S^(p-1)}",
                   {Span{Ring::CA, gens}}});
  }
  for (int i = 1; i <= q - 2; ++i) {
    CohClass vi = c.v().pow(i);
    out.push_back({"CA{v^" + std::to_string(i) + "(S^" + std::to_string(i) + "+T^" + std::to_string(i) + ")}",
                   {Span{Ring::CA, times(vi, join(S(i), T(i)))}}});
  }
  std::vector<Span> mixed;
  for (int i = 1; i <= q - 2; ++i)
    for (int r = 1; r <= q - 2; ++r)
      if (i != r) mixed.push_back(Span{Ring::CA, times(c.v().pow(r), join(S(i), T(i)))});
  if (!mixed.empty()) out.push_back({"sum CA{v^q(S^i+T^i)}, i!=q", mixed});
  return out;
}

Span Subspaces::inner_Z(int i) const {
  const Cohomology& c = *coh_;
  return Span{Ring::CA, join(times(c.v().pow(i), M(0)), times(c.V(), M(i)))};
}

std::vector<Span> Subspaces::Z(int i) const { return {Span{Ring::C, S(i)}, inner_Z(i)}; }

}  // namespace burnside

#ifndef BURNSIDE_SUBSPACES_HPP
#define BURNSIDE_SUBSPACES_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "burnside/cohomology.hpp"

namespace burnside {

// Polynomial subrings used as coefficient rings of graded spans.
enum class Ring {
  scalars,   // F_p
  CA,        // F_p[C, V]
  DA,        // F_p[D1, D2]
  C,         // F_p[C]
  V,         // F_p[V]
  D1,        // F_p[D1]
  A_DA,      // F_p[D1~, D2~] inside H*(A)
  A_D1,      // F_p[D1~]
  A_full,    // F_p[y, u]
};

// R{gens}: the R-submodule generated by a finite set of homogeneous classes.
struct Span {
  Ring ring = Ring::scalars;
  std::vector<CohClass> gens;
};

class Subspaces {
 public:
  explicit Subspaces(const Cohomology& coh);

  const Cohomology& coh() const { return *coh_; }
  int p() const { return coh_->p(); }

  // classes of H*(E)
  std::vector<CohClass> S(int i) const;  // y1^{i-t} y2^t
  std::vector<CohClass> T(int i) const;  // y1^{p-1-t} y2^{i+t}
  std::vector<CohClass> M(int i) const;  // C S^i + T^i
  std::vector<CohClass> N(int i) const;  // sum_j C^j M_i
  std::vector<CohClass> scalars() const;  // {1}

  static std::vector<CohClass> times(const CohClass& a, const std::vector<CohClass>& xs);
  static std::vector<CohClass> join(std::vector<CohClass> a, const std::vector<CohClass>& b);

  // ring monomials of exactly weight n
  const std::vector<CohClass>& ring_monomials(Ring r, int n) const;
  // rref basis of the weight-n slice
  FpMatrix slice(const Span& s, int n) const;
  FpMatrix slice(const std::vector<Span>& ss, int n) const;
  std::size_t width(Ring r, int n) const;

  // named slices for reports: S, T, M, N (index i), CA, DA
  FpMatrix named(const std::string& name, int i, int n) const;

  // the four families of stable subspaces, named
  std::vector<std::pair<std::string, std::vector<Span>>> stable_families() const;
  // Z_i = F_p[C]{S^i} + CA{v^i M_0 + V M_i}
  std::vector<Span> Z(int i) const;
  Span inner_Z(int i) const;  // CA{v^i M_0 + V M_i}

 private:
  const Group& group_of(Ring r) const;
  std::vector<CohClass> ring_gens(Ring r) const;

  const Cohomology* coh_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Ring, int>, std::vector<CohClass>> monos_;
};

}  // namespace burnside

#endif

#ifndef BURNSIDE_SIMPLES_HPP
#define BURNSIDE_SIMPLES_HPP

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "burnside/biset.hpp"
#include "burnside/meataxe.hpp"

namespace burnside {

enum class MinimalSubgroup { whole, rank_two, cyclic, trivial };

// Simple modules of A_p(G,G) for G = E or the rank-two A.
//   over E: whole -> S(E,E,S^i det^q), rank_two -> S(E,A,S^{p-1} det^q),
//           cyclic -> S(E,Q,U_i), trivial -> trivial minimal subgroup
//   over A: whole -> S(A,A,S^i det^q), cyclic -> S(A,Q,U_i), trivial
struct SimpleId {
  bool over_E = true;
  MinimalSubgroup kind = MinimalSubgroup::whole;
  int i = 0;
  int q = 0;

  std::string name() const;
  int expected_dim(int p) const;
  bool operator==(const SimpleId& o) const {
    return over_E == o.over_E && kind == o.kind && i == o.i && q == o.q;
  }
  bool operator<(const SimpleId& o) const;
};

SimpleId E_type(int i, int q);
SimpleId A_type(int q);
SimpleId Q_type(int i);
SimpleId trivial_min();

// Sym^i of the substitution y -> a y + b u, u -> c y + d u, times det^q
FpMatrix sym_power(const Mat2& g, int i, int q, int p);

class Simples {
 public:
  explicit Simples(const BisetContext& ctx);

  const BisetContext& ctx() const { return *ctx_; }
  int p() const { return ctx_->p(); }
  // the generator family whose action defines every module here
  const std::vector<BisetElement>& family(const Group& g) const;

  // complete list of simple A_p(G,G)-modules
  std::vector<SimpleId> census(const Group& g) const;
  const Module& reference(const SimpleId& id) const;
  // S_{H,V}(G) built as the image of V (x) A(G,H) -> prod_{phi in A(H,G)} V;
  // V is given by its matrix on each basis class of A(H,H)
  Module simple_functor_value(const Group& g, const Group& h, std::size_t dim_v,
                              const std::function<FpMatrix(const BisetSpace&, int)>& v_action) const;
  // S_{A, S(A)^i det^q}(E)
  Module rank_two_value(int i, int q) const;

  // unique census entry isomorphic to an irreducible factor
  std::optional<SimpleId> identify(const Module& factor, const Group& g) const;

 private:
  FpMatrix gl2_type_action(const BisetSpace& s, int cls, int i, int q) const;
  FpMatrix cyclic_action(const BisetSpace& s, int cls, int i) const;

  const BisetContext* ctx_;
  std::vector<BisetElement> fam_e_, fam_a_;
  mutable std::mutex mu_;
  mutable std::map<SimpleId, Module> refs_;
};

}  // namespace burnside

#endif

#ifndef BURNSIDE_BISET_HPP
#define BURNSIDE_BISET_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

// Basis of A_p(G,H): classes of pairs (K <= G, phi: K -> H) up to
// (x,y) . (K,phi) = (x K x^-1, c_y phi c_{x^-1}).
class BisetSpace {
 public:
  BisetSpace(const Group& g, const Group& h);

  const Group& source() const { return *g_; }
  const Group& target() const { return *h_; }
  std::size_t dim() const { return reps_.size(); }
  const Hom& rep(int cls) const { return reps_[static_cast<std::size_t>(cls)]; }
  int class_of(const Hom& phi) const;
  int pair_count() const { return pair_count_; }
  std::string label(int cls) const;

 private:
  std::string key(const Hom& phi) const;
  const Group* g_;
  const Group* h_;
  std::vector<Hom> reps_;
  std::unordered_map<std::string, int> index_;
  int pair_count_ = 0;
};

struct BisetElement {
  const BisetSpace* space = nullptr;
  std::vector<std::uint8_t> coeff;

  int p() const { return space->source().p(); }
  bool is_zero() const;
  BisetElement operator+(const BisetElement& o) const;
  BisetElement operator-(const BisetElement& o) const;
  BisetElement scaled(int s) const;
  bool operator==(const BisetElement& o) const { return space == o.space && coeff == o.coeff; }
  std::vector<std::pair<int, int>> support() const;
};

// Owns the groups E, A, Q, 1 at a fixed prime together with every biset space
// and the memoized structure constants.
class BisetContext {
 public:
  explicit BisetContext(int p);

  int p() const { return p_; }
  const Group& E() const { return *e_; }
  const Group& A() const { return *a_; }
  const Group& Q() const { return *q_; }
  const Group& one() const { return *one_; }

  const BisetSpace& space(const Group& g, const Group& h) const;

  BisetElement zero(const Group& g, const Group& h) const;
  BisetElement basis(const Group& g, const Group& h, int cls) const;
  BisetElement basis_of(const Hom& phi) const;  // class of the pair (phi.domain, phi)
  BisetElement identity(const Group& g) const;
  // z2 in A(G2,G3), z1 in A(G1,G2); result in A(G1,G3)
  BisetElement mul(const BisetElement& z2, const BisetElement& z1) const;
  // structure constants of one basis product
  const std::vector<std::pair<int, int>>& basis_product(const BisetSpace& s2, int c2, const BisetSpace& s1,
                                                         int c1) const;

  // F_p Out(G) for G = E or A, coordinates indexed by gl2_elements(p).
  BisetElement iota(const Group& g, const std::vector<std::uint8_t>& w) const;
  BisetElement iota(const Group& g, const Mat2& m) const;
  std::vector<std::uint8_t> pi(const BisetElement& z) const;

  // classes of A(G,G) with phi(K) < G
  bool in_ideal(const BisetSpace& s, int cls) const;
  std::vector<int> ideal_classes(const Group& g) const;
  std::vector<int> out_classes(const Group& g) const;

  struct IdealGenerators {
    std::vector<int> i0, i1, triv;
  };
  // For E: maximal elementary abelian sources with injective phi, surjections onto them,
  // and bisets factoring through the trivial group.
  IdealGenerators ideal_generators_E() const;

  // Generating family for the right action: two GL_2 lifts followed by the ideal part.
  std::vector<BisetElement> action_family(const Group& g) const;
  std::size_t family_out_count() const { return 2; }

  void dump_csv(const Group& g, std::ostream& os) const;

 private:
  struct Table {
    std::mutex mu;
    std::vector<std::optional<std::vector<std::pair<int, int>>>> entries;
  };
  Table& table(const BisetSpace& s2, const BisetSpace& s1) const;
  std::vector<std::pair<int, int>> compute_product(const BisetSpace& s2, int c2, const BisetSpace& s1,
                                                   int c1) const;

  int p_;
  GroupPtr e_, a_, q_, one_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<const Group*, const Group*>, std::unique_ptr<BisetSpace>> spaces_;
  mutable std::map<std::pair<const BisetSpace*, const BisetSpace*>, std::unique_ptr<Table>> tables_;
};

// Span of the algebra generated by gens (with identity), computed by spinning 1.
std::size_t generated_algebra_dim(const BisetContext& ctx, const std::vector<BisetElement>& gens);
// Two-sided ideal of A(G,G) generated by the given elements.
std::size_t generated_ideal_dim(const BisetContext& ctx, const Group& g, const std::vector<BisetElement>& gens);

}  // namespace burnside

#endif

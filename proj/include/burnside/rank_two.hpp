#ifndef BURNSIDE_RANK_TWO_HPP
#define BURNSIDE_RANK_TWO_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "burnside/subspaces.hpp"

namespace burnside {

// H*(A) = F_p[y,u] as a module over A_p(A,A), and its link to H*(E) through
// the quotient map q. Rows are coefficient vectors of y^{n-j}u^j.
class RankTwo {
 public:
  explicit RankTwo(const Subspaces& sub);

  const Subspaces& sub() const { return *sub_; }
  const Cohomology& coh() const { return sub_->coh(); }
  int p() const { return coh().p(); }

  // row j = q*(y^{n-j}u^j) as a tuple of H*(E)
  FpMatrix q_star(int n) const;
  // all f in H^{2n}(A) with q*(f) in the span of the given E-tuples
  FpMatrix preimage(const FpMatrix& e_rows, int n) const;
  // d2^m H*(A) in weight n
  FpMatrix d2_slice(int m, int n) const;
  // sum over GL_2 of legendre(tr^2 - 4 det) g; reduces the Steinberg character mod p
  FpMatrix steinberg_projection(int n) const;
  // matrix of iota(g) on weight n of H*(G), G = E or A, in tuple coordinates
  FpMatrix gl2_action(const Group& g, const Mat2& m, int n) const;

  int W_weight(int j) const { return (j + 1) * (p() - 1); }
  // GL_2-complement of d2 H*(A) inside the preimage of C^j S^{p-1}
  const FpMatrix& W(int j) const;
  std::vector<CohClass> W_classes(int j, int m) const;  // rows of d2^m W_j
  // Dickson-span of the sum over j of d2^m W_j; m = -1 means D2~ W_j
  FpMatrix dickson_W(int m, int n) const;

  // H^{2n}(Q) A_p(A,Q)
  FpMatrix cyclic_image(int n) const;
  // L^{2n}(Q) = H^{2n}(Q) A_p(A,Q) + d2 H*(A)
  FpMatrix L_slice(int n) const;
  // span of x.zeta over x in rows (weight n on H) and all basis classes of A(G,H)
  FpMatrix biset_image(const Group& g, const Group& h, const FpMatrix& rows, int n) const;

 private:
  FpMatrix build_W(int j) const;

  const Subspaces* sub_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<FpMatrix>> w_;
};

}  // namespace burnside

#endif

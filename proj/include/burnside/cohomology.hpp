#ifndef BURNSIDE_COHOMOLOGY_HPP
#define BURNSIDE_COHOMOLOGY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "burnside/biset.hpp"
#include "burnside/fp.hpp"
#include "burnside/group.hpp"

namespace burnside {

// Layout of even-degree reduced cohomology of G as a tuple of restrictions to
// its maximal elementary abelian subgroups (frames). A rank-two frame carries
// the coefficients of y^{n-j}u^j, j=0..n; rank one carries y^n; rank zero only
// the constant in weight 0.
class CohModel {
 public:
  explicit CohModel(const Group& g);

  const Group& group() const { return *g_; }
  int p() const { return g_->p(); }
  std::size_t frame_count() const { return g_->frames().size(); }
  int rank(std::size_t f) const { return g_->frames()[f].rank; }
  std::size_t frame_width(std::size_t f, int n) const;
  std::size_t offset(std::size_t f, int n) const;
  std::size_t width(int n) const;

 private:
  const Group* g_;
};

struct CohClass {
  const CohModel* model = nullptr;
  int weight = 0;
  std::vector<std::uint8_t> v;

  int p() const { return model->p(); }
  bool is_zero() const { return is_zero_vector(v); }
  CohClass operator+(const CohClass& o) const;
  CohClass operator-(const CohClass& o) const;
  CohClass operator*(const CohClass& o) const;
  CohClass scaled(int s) const;
  CohClass pow(int e) const;
  bool operator==(const CohClass& o) const { return model == o.model && weight == o.weight && v == o.v; }
  // coefficients of frame f
  std::vector<std::uint8_t> frame(std::size_t f) const;
};

// One weight of a graded subspace: rows are tuples, labels name the monomial
// each row was produced from.
struct GradedPiece {
  int weight = 0;
  FpMatrix basis;
  std::vector<std::string> labels;
  std::vector<std::array<int, 4>> monomials;  // exponents of y1, y2, C, v (y, u for A)
  std::shared_ptr<const LeftSolver> solver;
  std::size_t dim() const { return basis.rows(); }
};

// Everything about H*(E), H*(A), H*(Q), H*(1) at one prime, with the biset action.
class Cohomology {
 public:
  explicit Cohomology(const BisetContext& ctx);

  const BisetContext& ctx() const { return *ctx_; }
  int p() const { return p_; }
  const CohModel& model(const Group& g) const;

  CohClass zero(const Group& g, int n) const;
  CohClass one(const Group& g) const;
  CohClass from_vector(const Group& g, int n, std::vector<std::uint8_t> v) const;

  // generators of H*(E)
  CohClass y1() const;
  CohClass y2() const;
  CohClass C() const;
  CohClass v() const;
  CohClass V() const;
  CohClass D1() const;
  CohClass D2() const;
  // y_hat of a frame: y1 on A_i, y2 on A_inf
  CohClass y_hat(std::size_t frame) const;
  // monomial y1^a y2^b C^c v^d
  CohClass monomial(int a, int b, int c, int d) const;

  // H*(A) = F_p[y,u]
  CohClass ay() const;
  CohClass au() const;
  CohClass a_poly(int n, const std::vector<int>& coeffs) const;  // sum coeffs[j] y^{n-j} u^j
  CohClass d2() const;
  CohClass D1_tilde() const;
  CohClass D2_tilde() const;
  // H*(Q) = F_p[y]
  CohClass qy() const;

  // pullback matrix on weight n: row j = image of y^{n-j}u^j, for the linear
  // substitution y -> L00 y + L01 u, u -> L10 y + L11 u
  const FpMatrix& sym(const std::array<int, 4>& l, int n) const;

  // x . zeta: x in H*(target of the space), result in H*(source)
  CohClass act(const BisetElement& z, const CohClass& x) const;
  CohClass act_basis(const BisetSpace& s, int cls, const CohClass& x) const;
  // rows are tuples of weight n on the target side
  FpMatrix act_rows(const BisetSpace& s, int cls, const FpMatrix& rows, int n) const;
  FpMatrix act_rows(const BisetElement& z, const FpMatrix& rows, int n) const;
  // pullback along a homomorphism defined on all of src
  CohClass pullback(const Hom& phi, const CohClass& x) const;
  CohClass restrict_to_frame(const CohClass& x, std::size_t frame) const;  // into H*(A)
  // transfer from a frame of E of a class in H*(A) written in that frame's coordinates
  CohClass transfer(std::size_t frame, const CohClass& f) const;

  // weight-n slice of H*(G); for E built from monomials in y1, y2, C, v
  const GradedPiece& piece(const Group& g, int n) const;
  const GradedPiece& he_basis(int n) const { return piece(ctx_->E(), n); }
  // coordinates of tuple rows in the piece basis
  FpMatrix coordinates(const Group& g, int n, const FpMatrix& rows) const;
  // right action matrices on piece(g, n) in its fixed basis
  std::vector<FpMatrix> action_matrices(const Group& g, int n, const std::vector<BisetElement>& gens) const;

  // one summand of the restriction of x.zeta to a source frame
  struct Term {
    std::size_t out_frame, in_frame;
    std::array<int, 4> l;
  };

  // fixed surjection E -> A with q*(y)=y1, q*(u)=y2
  const Hom& quotient_map() const { return q_; }

 private:
  const BisetContext* ctx_;
  int p_;
  std::map<const Group*, std::unique_ptr<CohModel>> models_;
  Hom q_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::array<int, 4>, int>, std::unique_ptr<FpMatrix>> sym_;
  mutable std::map<std::pair<const Group*, int>, std::unique_ptr<GradedPiece>> pieces_;
  const std::vector<Term>& terms(const BisetSpace& s, int cls) const;
  std::vector<Term> compute_terms(const Hom& phi) const;
  mutable std::map<std::pair<const BisetSpace*, int>, std::vector<Term>> terms_;
  std::unique_ptr<GradedPiece> build_piece(const Group& g, int n) const;
};

// span of rows given as classes
FpMatrix span_of(const std::vector<CohClass>& xs, std::size_t width, int p);

}  // namespace burnside

#endif

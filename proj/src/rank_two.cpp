#include "burnside/rank_two.hpp"

#include <stdexcept>

namespace burnside {

RankTwo::RankTwo(const Subspaces& sub) : sub_(&sub) {}

FpMatrix RankTwo::q_star(int n) const {
  const Cohomology& c = coh();
  FpMatrix out(p(), 0, c.model(c.ctx().E()).width(n));
  for (int j = 0; j <= n; ++j) {
    std::vector<int> coeffs(static_cast<std::size_t>(n + 1), 0);
    coeffs[static_cast<std::size_t>(j)] = 1;
    out.append_row(c.pullback(c.quotient_map(), c.a_poly(n, coeffs)).v);
  }
  return out;
}

FpMatrix RankTwo::preimage(const FpMatrix& e_rows, int n) const {
  // left kernel of [Q; X], keep the Q part
  FpMatrix q = q_star(n);
  FpMatrix stacked = q;
  stacked.append_rows(e_rows);
  FpMatrix ker = nullspace(stacked.transpose());
  FpMatrix out(p(), 0, static_cast<std::size_t>(n + 1));
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    std::vector<std::uint8_t> v(ker.row(r), ker.row(r) + n + 1);
    out.append_row(v);
  }
  return row_basis(out);
}

FpMatrix RankTwo::d2_slice(int m, int n) const {
  const Cohomology& c = coh();
  return sub_->slice(Span{Ring::A_full, {c.d2().pow(m)}}, n);
}

FpMatrix RankTwo::gl2_action(const Group& g, const Mat2& m, int n) const {
  const Cohomology& c = coh();
  std::size_t w = c.model(g).width(n);
  return c.act_rows(c.ctx().iota(g, m), FpMatrix::identity(p(), w), n);
}

FpMatrix RankTwo::steinberg_projection(int n) const {
  const int q = p();
  auto els = gl2_elements(q);
  std::vector<std::uint8_t> w(els.size(), 0);
  for (std::size_t k = 0; k < els.size(); ++k) {
    const Mat2& g = els[k];
    long long tr = g.a + g.d;
    int disc = fp_reduce(tr * tr - 4LL * mat2_det(g, q), q);
    w[k] = static_cast<std::uint8_t>(disc == 0 ? 0 : fp_pow(disc, (q - 1) / 2, q));
  }
  const Cohomology& c = coh();
  const Group& a = c.ctx().A();
  return c.act_rows(c.ctx().iota(a, w), FpMatrix::identity(q, static_cast<std::size_t>(n + 1)), n);
}

namespace {

FpMatrix coords_in(const FpMatrix& basis, const FpMatrix& rows) {
  LeftSolver s(basis);
  FpMatrix out(basis.p(), 0, basis.rows());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    auto c = s.solve(rows.row_vector(r));
    if (!c) throw std::logic_error("row is outside the expected span");
    out.append_row(*c);
  }
  return out;
}

}  // namespace

FpMatrix RankTwo::build_W(int j) const {
  const int q = p();
  const int n = W_weight(j);
  const Cohomology& c = coh();
  const Group& e = c.ctx().E();
  const Group& a = c.ctx().A();
  FpMatrix target = sub_->slice(Span{Ring::scalars, Subspaces::times(c.C().pow(j), sub_->S(q - 1))}, n);
  FpMatrix pre = preimage(target, n);
  // Steinberg-isotypic part, which still maps onto the target
  FpMatrix x = row_basis(pre * steinberg_projection(n));
  const std::size_t k = x.rows();
  const std::size_t d = target.rows();
  FpMatrix qx = coords_in(target, x * q_star(n));
  // unknown section s (d x k): s Xg = Tg s for the GL_2 generators, s qx = 1
  const std::size_t nu = d * k;
  std::vector<std::vector<std::uint8_t>> cols;  // one column of the transposed system per equation
  std::vector<std::uint8_t> rhs;
  auto var = [&](std::size_t r, std::size_t col) { return r * k + col; };
  for (const Mat2& g : gl2_generators(q)) {
    FpMatrix xg = coords_in(x, x * gl2_action(a, g, n));
    FpMatrix tg = coords_in(target, c.act_rows(c.ctx().iota(e, g), target, n));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t col = 0; col < k; ++col) {
        std::vector<std::uint8_t> eq(nu, 0);
        for (std::size_t b = 0; b < k; ++b) eq[var(r, b)] = static_cast<std::uint8_t>((eq[var(r, b)] + xg.at(b, col)) % q);
        for (std::size_t b = 0; b < d; ++b)
          eq[var(b, col)] = static_cast<std::uint8_t>((eq[var(b, col)] + q - tg.at(r, b)) % q);
        cols.push_back(std::move(eq));
        rhs.push_back(0);
      }
  }
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t col = 0; col < d; ++col) {
      std::vector<std::uint8_t> eq(nu, 0);
      for (std::size_t b = 0; b < k; ++b) eq[var(r, b)] = static_cast<std::uint8_t>(qx.at(b, col));
      cols.push_back(std::move(eq));
      rhs.push_back(r == col ? 1 : 0);
    }
  FpMatrix sys(q, nu, cols.size());
  for (std::size_t eqi = 0; eqi < cols.size(); ++eqi)
    for (std::size_t u = 0; u < nu; ++u) sys.set(u, eqi, cols[eqi][u]);
  auto sol = LeftSolver(sys).solve(rhs);
  if (!sol) throw std::logic_error("no GL_2-equivariant section of q* in weight " + std::to_string(n));
  FpMatrix s(q, d, k);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t col = 0; col < k; ++col) s.set(r, col, (*sol)[var(r, col)]);
  FpMatrix w = row_basis(s * x);
  if (w.rows() != d) throw std::logic_error("W has the wrong dimension");
  return w;
}

const FpMatrix& RankTwo::W(int j) const {
  if (j < 0 || j > p() - 1) throw std::invalid_argument("W_j needs 0 <= j <= p-1");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = w_.find(j);
    if (it != w_.end()) return *it->second;
  }
  auto w = std::make_unique<FpMatrix>(build_W(j));
  std::lock_guard<std::mutex> lock(mu_);
  auto it = w_.find(j);
  if (it == w_.end()) it = w_.emplace(j, std::move(w)).first;
  return *it->second;
}

std::vector<CohClass> RankTwo::W_classes(int j, int m) const {
  const Cohomology& c = coh();
  const Group& a = c.ctx().A();
  CohClass mult = m < 0 ? c.D2_tilde() : c.d2().pow(m);
  std::vector<CohClass> out;
  const FpMatrix& w = W(j);
  for (std::size_t r = 0; r < w.rows(); ++r) out.push_back(c.from_vector(a, W_weight(j), w.row_vector(r)) * mult);
  return out;
}

FpMatrix RankTwo::dickson_W(int m, int n) const {
  std::vector<CohClass> gens;
  for (int j = 0; j <= p() - 1; ++j) gens = Subspaces::join(gens, W_classes(j, m));
  return sub_->slice(Span{Ring::A_DA, gens}, n);
}

FpMatrix RankTwo::biset_image(const Group& g, const Group& h, const FpMatrix& rows, int n) const {
  const Cohomology& c = coh();
  const BisetSpace& s = c.ctx().space(g, h);
  FpMatrix acc(p(), 0, c.model(g).width(n));
  for (std::size_t cls = 0; cls < s.dim(); ++cls) acc.append_rows(c.act_rows(s, static_cast<int>(cls), rows, n));
  return row_basis(acc);
}

FpMatrix RankTwo::cyclic_image(int n) const {
  const Cohomology& c = coh();
  FpMatrix y(p(), 0, 1);
  y.append_row(c.qy().pow(n).v);
  return biset_image(c.ctx().A(), c.ctx().Q(), y, n);
}

FpMatrix RankTwo::L_slice(int n) const { return subspace_sum(cyclic_image(n), d2_slice(1, n)); }

}  // namespace burnside

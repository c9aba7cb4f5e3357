#include "burnside/simples.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace burnside {

std::string SimpleId::name() const {
  std::ostringstream os;
  const char* g = over_E ? "E" : "A";
  switch (kind) {
    case MinimalSubgroup::whole:
      os << "S(" << g << "," << g << ",S^" << i << "*det^" << q << ")";
      break;
    case MinimalSubgroup::rank_two:
      os << "S(" << g << ",A,S^(p-1)*det^" << q << ")";
      break;
    case MinimalSubgroup::cyclic:
      os << "S(" << g << ",Q,U_" << i << ")";
      break;
    case MinimalSubgroup::trivial:
      os << "S(" << g << ",1,k)";
      break;
  }
  return os.str();
}

int SimpleId::expected_dim(int p) const {
  switch (kind) {
    case MinimalSubgroup::whole:
      return i + 1;
    case MinimalSubgroup::rank_two:
      return p + 1;
    case MinimalSubgroup::cyclic:
      if (i == 0) return over_E ? p + 1 : p;
      return i + 1;
    case MinimalSubgroup::trivial:
      return 1;
  }
  return 0;
}

bool SimpleId::operator<(const SimpleId& o) const {
  return std::make_tuple(!over_E, static_cast<int>(kind), i, q) <
         std::make_tuple(!o.over_E, static_cast<int>(o.kind), o.i, o.q);
}

SimpleId E_type(int i, int q) { return SimpleId{true, MinimalSubgroup::whole, i, q}; }
SimpleId A_type(int q) { return SimpleId{true, MinimalSubgroup::rank_two, 0, q}; }
SimpleId Q_type(int i) { return SimpleId{true, MinimalSubgroup::cyclic, i, 0}; }
SimpleId trivial_min() { return SimpleId{true, MinimalSubgroup::trivial, 0, 0}; }

FpMatrix sym_power(const Mat2& g, int i, int q, int p) {
  // row t: (a y + b u)^{i-t} (c y + d u)^t in the basis y^{i-k} u^k
  const std::size_t w = static_cast<std::size_t>(i + 1);
  int scale = fp_pow(mat2_det(g, p), q, p);
  FpMatrix m(p, w, w);
  for (std::size_t t = 0; t < w; ++t) {
    std::vector<int> poly{1};
    auto times = [&](int c0, int c1) {
      std::vector<int> next(poly.size() + 1, 0);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k] = (next[k] + poly[k] * c0) % p;
        next[k + 1] = (next[k + 1] + poly[k] * c1) % p;
      }
      poly = std::move(next);
    };
    for (std::size_t s = 0; s + t < w - 1; ++s) times(fp_reduce(g.a, p), fp_reduce(g.b, p));
    for (std::size_t s = 0; s < t; ++s) times(fp_reduce(g.c, p), fp_reduce(g.d, p));
    for (std::size_t k = 0; k < w; ++k) m.set(t, k, static_cast<long long>(poly[k]) * scale);
  }
  return m;
}

Simples::Simples(const BisetContext& ctx)
    : ctx_(&ctx), fam_e_(ctx.action_family(ctx.E())), fam_a_(ctx.action_family(ctx.A())) {}

const std::vector<BisetElement>& Simples::family(const Group& g) const {
  if (&g == &ctx_->E()) return fam_e_;
  if (&g == &ctx_->A()) return fam_a_;
  throw std::invalid_argument("no generator family for " + g.name());
}

std::vector<SimpleId> Simples::census(const Group& g) const {
  const int p = this->p();
  std::vector<SimpleId> out;
  bool e = &g == &ctx_->E();
  if (!e && &g != &ctx_->A()) throw std::invalid_argument("census is defined for E and A");
  for (int i = 0; i <= p - 2; ++i) out.push_back(SimpleId{e, MinimalSubgroup::cyclic, i, 0});
  if (e)
    for (int q = 0; q <= p - 2; ++q) out.push_back(A_type(q));
  for (int i = 0; i <= p - 1; ++i)
    for (int q = 0; q <= p - 2; ++q) out.push_back(SimpleId{e, MinimalSubgroup::whole, i, q});
  out.push_back(SimpleId{e, MinimalSubgroup::trivial, 0, 0});
  return out;
}

FpMatrix Simples::gl2_type_action(const BisetSpace& s, int cls, int i, int q) const {
  const Hom& r = s.rep(cls);
  const Group& g = s.source();
  if (r.domain != g.whole() || !r.injective()) return FpMatrix(p(), static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i + 1));
  return sym_power(induced_matrix(r), i, q, p());
}

FpMatrix Simples::cyclic_action(const BisetSpace& s, int cls, int i) const {
  const Hom& r = s.rep(cls);
  const Group& g = s.source();
  FpMatrix m(p(), 1, 1);
  if (r.domain != g.whole() || !r.injective()) return m;
  int gen = g.subgroup(g.whole()).gens.front();
  int lam = 0;
  for (int t = 1; t < p(); ++t)
    if (g.pow(gen, t) == r(gen)) lam = t;
  m.set(0, 0, fp_pow(lam, i, p()));
  return m;
}

Module Simples::simple_functor_value(const Group& g, const Group& h, std::size_t dim_v,
                                     const std::function<FpMatrix(const BisetSpace&, int)>& v_action) const {
  const int p = this->p();
  const BisetContext& c = *ctx_;
  const BisetSpace& gh = c.space(g, h);
  const BisetSpace& hg = c.space(h, g);
  const BisetSpace& hh = c.space(h, h);
  std::vector<FpMatrix> vmat;
  for (std::size_t k = 0; k < hh.dim(); ++k) vmat.push_back(v_action(hh, static_cast<int>(k)));
  const std::size_t width = dim_v * hg.dim();
  // P[a]: dim_v x width, row k = image of e_k (x) alpha_a
  std::vector<FpMatrix> proj;
  proj.reserve(gh.dim());
  for (std::size_t a = 0; a < gh.dim(); ++a) {
    FpMatrix m(p, dim_v, width);
    for (std::size_t f = 0; f < hg.dim(); ++f) {
      for (auto [cls, coef] : c.basis_product(gh, static_cast<int>(a), hg, static_cast<int>(f))) {
        const FpMatrix& vm = vmat[static_cast<std::size_t>(cls)];
        for (std::size_t k = 0; k < dim_v; ++k)
          for (std::size_t l = 0; l < dim_v; ++l)
            m.set(k, f * dim_v + l, m.at(k, f * dim_v + l) + coef * vm.at(k, l));
      }
    }
    proj.push_back(std::move(m));
  }
  Subspace img(p, width);
  FpMatrix chosen(p, 0, width);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (k, alpha)
  for (std::size_t a = 0; a < gh.dim(); ++a)
    for (std::size_t k = 0; k < dim_v; ++k) {
      auto row = proj[a].row_vector(k);
      if (img.insert(row)) {
        chosen.append_row(row);
        pairs.emplace_back(k, a);
      }
    }
  const std::size_t d = chosen.rows();
  LeftSolver solver(chosen);
  const auto& fam = family(g);
  const BisetSpace& gg = c.space(g, g);
  Module out{p, d, {}};
  for (const auto& z : fam) {
    if (z.space != &gg) throw std::logic_error("family element is not an endomorphism biset");
    FpMatrix act(p, 0, d);
    for (auto [k, a] : pairs) {
      std::vector<std::uint8_t> row(width, 0);
      for (auto [zc, zv] : z.support())
        for (auto [cls, coef] : c.basis_product(gh, static_cast<int>(a), gg, zc))
          axpy(row, zv * coef, proj[static_cast<std::size_t>(cls)].row_vector(k), p);
      auto coords = solver.solve(row);
      if (!coords) throw std::logic_error("simple functor image is not stable");
      act.append_row(*coords);
    }
    out.gens.push_back(std::move(act));
  }
  return out;
}

Module Simples::rank_two_value(int i, int q) const {
  const Group& a = ctx_->A();
  return simple_functor_value(ctx_->E(), a, static_cast<std::size_t>(i + 1),
                              [&](const BisetSpace& s, int cls) { return gl2_type_action(s, cls, i, q); });
}

const Module& Simples::reference(const SimpleId& id) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = refs_.find(id);
    if (it != refs_.end()) return it->second;
  }
  const int p = this->p();
  const BisetContext& c = *ctx_;
  const Group& g = id.over_E ? c.E() : c.A();
  Module m;
  switch (id.kind) {
    case MinimalSubgroup::whole: {
      // two GL_2 lifts first, every other family member lies in J
      const auto gl = gl2_generators(p);
      const auto& fam = family(g);
      const std::size_t d = static_cast<std::size_t>(id.i + 1);
      m = Module{p, d, {}};
      for (std::size_t k = 0; k < fam.size(); ++k)
        m.gens.push_back(k < gl.size() ? sym_power(gl[k], id.i, id.q, p) : FpMatrix(p, d, d));
      break;
    }
    case MinimalSubgroup::rank_two:
      m = rank_two_value(p - 1, id.q);
      break;
    case MinimalSubgroup::cyclic:
      m = simple_functor_value(g, c.Q(), 1, [&](const BisetSpace& s, int cls) { return cyclic_action(s, cls, id.i); });
      break;
    case MinimalSubgroup::trivial:
      m = simple_functor_value(g, c.one(), 1, [&](const BisetSpace&, int) { return FpMatrix::identity(p, 1); });
      break;
  }
  std::lock_guard<std::mutex> lock(mu_);
  return refs_.emplace(id, std::move(m)).first->second;
}

std::optional<SimpleId> Simples::identify(const Module& factor, const Group& g) const {
  std::optional<SimpleId> found;
  for (const auto& id : census(g)) {
    if (id.expected_dim(p()) != static_cast<int>(factor.dim)) continue;
    const Module& ref = reference(id);
    if (ref.dim != factor.dim) continue;
    if (iso_test(ref, factor)) {
      if (found) throw std::logic_error("factor matches two census entries: " + found->name() + ", " + id.name());
      found = id;
    }
  }
  return found;
}

}  // namespace burnside

#include "burnside/cohomology.hpp"

#include <sstream>
#include <stdexcept>

namespace burnside {

CohModel::CohModel(const Group& g) : g_(&g) {}

std::size_t CohModel::frame_width(std::size_t f, int n) const {
  switch (rank(f)) {
    case 2:
      return static_cast<std::size_t>(n + 1);
    case 1:
      return 1;
    default:
      return n == 0 ? 1 : 0;
  }
}

std::size_t CohModel::offset(std::size_t f, int n) const {
  std::size_t o = 0;
  for (std::size_t t = 0; t < f; ++t) o += frame_width(t, n);
  return o;
}

std::size_t CohModel::width(int n) const { return offset(frame_count(), n); }

namespace {

void check_same(const CohClass& a, const CohClass& b) {
  if (a.model != b.model || a.weight != b.weight) throw std::invalid_argument("cohomology classes live in different slices");
}

}  // namespace

CohClass CohClass::operator+(const CohClass& o) const {
  check_same(*this, o);
  CohClass r = *this;
  axpy(r.v, 1, o.v, p());
  return r;
}

CohClass CohClass::operator-(const CohClass& o) const {
  check_same(*this, o);
  CohClass r = *this;
  axpy(r.v, p() - 1, o.v, p());
  return r;
}

CohClass CohClass::scaled(int s) const {
  CohClass r = *this;
  int q = p();
  s = fp_reduce(s, q);
  for (auto& c : r.v) c = static_cast<std::uint8_t>(c * s % q);
  return r;
}

CohClass CohClass::operator*(const CohClass& o) const {
  if (model != o.model) throw std::invalid_argument("product of classes of different groups");
  const int q = p();
  const int n = weight + o.weight;
  CohClass r{model, n, std::vector<std::uint8_t>(model->width(n), 0)};
  for (std::size_t f = 0; f < model->frame_count(); ++f) {
    std::size_t wa = model->frame_width(f, weight), wb = model->frame_width(f, o.weight);
    if (wa == 0 || wb == 0) continue;
    const std::uint8_t* a = v.data() + model->offset(f, weight);
    const std::uint8_t* b = o.v.data() + model->offset(f, o.weight);
    std::uint8_t* out = r.v.data() + model->offset(f, n);
    if (model->rank(f) == 2) {
      std::vector<int> acc(static_cast<std::size_t>(n + 1), 0);
      for (std::size_t i = 0; i < wa; ++i)
        if (a[i])
          for (std::size_t j = 0; j < wb; ++j) acc[i + j] += a[i] * b[j];
      for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<std::uint8_t>(acc[k] % q);
    } else {
      out[0] = static_cast<std::uint8_t>(a[0] * b[0] % q);
    }
  }
  return r;
}

CohClass CohClass::pow(int e) const {
  CohClass r{model, 0, std::vector<std::uint8_t>(model->width(0), 1)};
  for (int t = 0; t < e; ++t) r = r * *this;
  return r;
}

std::vector<std::uint8_t> CohClass::frame(std::size_t f) const {
  auto o = model->offset(f, weight);
  return std::vector<std::uint8_t>(v.begin() + static_cast<long>(o),
                                   v.begin() + static_cast<long>(o + model->frame_width(f, weight)));
}

FpMatrix span_of(const std::vector<CohClass>& xs, std::size_t width, int p) {
  FpMatrix m(p, 0, width);
  for (const auto& x : xs) {
    if (x.v.size() != width) throw std::invalid_argument("class has wrong tuple width");
    m.append_row(x.v);
  }
  return m;
}

Cohomology::Cohomology(const BisetContext& ctx) : ctx_(&ctx), p_(ctx.p()) {
  for (const Group* g : {&ctx.E(), &ctx.A(), &ctx.Q(), &ctx.one()}) models_.emplace(g, std::make_unique<CohModel>(*g));
  const Group& a = ctx.A();
  auto q = hom_from_generators(ctx.E(), ctx.E().whole(), a, {a.index({1, 0, 0}), a.index({0, 1, 0})});
  if (!q) throw std::logic_error("quotient map E -> A does not exist");
  q_ = *q;
}

const CohModel& Cohomology::model(const Group& g) const {
  auto it = models_.find(&g);
  if (it == models_.end()) throw std::invalid_argument("group not owned by this context");
  return *it->second;
}

CohClass Cohomology::zero(const Group& g, int n) const {
  const CohModel& m = model(g);
  return CohClass{&m, n, std::vector<std::uint8_t>(m.width(n), 0)};
}

CohClass Cohomology::one(const Group& g) const {
  CohClass r = zero(g, 0);
  std::fill(r.v.begin(), r.v.end(), 1);
  return r;
}

CohClass Cohomology::from_vector(const Group& g, int n, std::vector<std::uint8_t> v) const {
  const CohModel& m = model(g);
  if (v.size() != m.width(n)) throw std::invalid_argument("tuple has wrong width");
  return CohClass{&m, n, std::move(v)};
}

namespace {

// class on E with the same frame polynomial everywhere except where set explicitly
CohClass uniform(const CohModel& m, int n, const std::vector<int>& coeffs) {
  CohClass r{&m, n, std::vector<std::uint8_t>(m.width(n), 0)};
  for (std::size_t f = 0; f < m.frame_count(); ++f)
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      r.v[m.offset(f, n) + j] = static_cast<std::uint8_t>(fp_reduce(coeffs[j], m.p()));
  return r;
}

}  // namespace

CohClass Cohomology::y1() const {
  const CohModel& m = model(ctx_->E());
  CohClass r = zero(ctx_->E(), 1);
  for (int i = 0; i < p_; ++i) r.v[m.offset(static_cast<std::size_t>(i), 1)] = 1;
  return r;
}

CohClass Cohomology::y2() const {
  const CohModel& m = model(ctx_->E());
  CohClass r = zero(ctx_->E(), 1);
  for (int i = 0; i < p_; ++i) r.v[m.offset(static_cast<std::size_t>(i), 1)] = static_cast<std::uint8_t>(i);
  r.v[m.offset(static_cast<std::size_t>(p_), 1)] = 1;
  return r;
}

CohClass Cohomology::C() const {
  std::vector<int> c(static_cast<std::size_t>(p_), 0);
  c[0] = 1;
  return uniform(model(ctx_->E()), p_ - 1, c);
}

CohClass Cohomology::v() const {
  std::vector<int> c(static_cast<std::size_t>(p_ + 1), 0);
  c[static_cast<std::size_t>(p_)] = 1;
  c[1] = -1;
  return uniform(model(ctx_->E()), p_, c);
}

CohClass Cohomology::V() const { return v().pow(p_ - 1); }
CohClass Cohomology::D1() const { return C().pow(p_) + V(); }
CohClass Cohomology::D2() const { return C() * V(); }

CohClass Cohomology::y_hat(std::size_t frame) const {
  return frame < static_cast<std::size_t>(p_) ? y1() : y2();
}

CohClass Cohomology::monomial(int a, int b, int c, int d) const {
  return y1().pow(a) * y2().pow(b) * C().pow(c) * v().pow(d);
}

CohClass Cohomology::a_poly(int n, const std::vector<int>& coeffs) const {
  CohClass r = zero(ctx_->A(), n);
  if (coeffs.size() > r.v.size()) throw std::invalid_argument("too many coefficients for weight");
  for (std::size_t j = 0; j < coeffs.size(); ++j) r.v[j] = static_cast<std::uint8_t>(fp_reduce(coeffs[j], p_));
  return r;
}

CohClass Cohomology::ay() const { return a_poly(1, {1, 0}); }
CohClass Cohomology::au() const { return a_poly(1, {0, 1}); }

CohClass Cohomology::d2() const {
  std::vector<int> c(static_cast<std::size_t>(p_ + 2), 0);
  c[static_cast<std::size_t>(p_)] = 1;
  c[1] = -1;
  return a_poly(p_ + 1, c);
}

CohClass Cohomology::D1_tilde() const {
  CohClass w = au().pow(p_) - ay().pow(p_ - 1) * au();
  return ay().pow(p_ * (p_ - 1)) + w.pow(p_ - 1);
}

CohClass Cohomology::D2_tilde() const { return d2().pow(p_ - 1); }

CohClass Cohomology::qy() const {
  CohClass r = zero(ctx_->Q(), 1);
  r.v[0] = 1;
  return r;
}

const FpMatrix& Cohomology::sym(const std::array<int, 4>& l, int n) const {
  auto key = std::make_pair(l, n);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = sym_.find(key);
    if (it != sym_.end()) return *it->second;
  }
  const std::size_t w = static_cast<std::size_t>(n + 1);
  // powers of y -> l0 + l1 t and u -> l2 + l3 t, as polynomials in t = u/y
  auto powers = [&](int c0, int c1) {
    std::vector<std::vector<int>> pw(w, std::vector<int>(w, 0));
    pw[0][0] = 1;
    for (std::size_t e = 1; e < w; ++e)
      for (std::size_t k = 0; k < e + 1; ++k) {
        int s = pw[e - 1][k] * c0;
        if (k) s += pw[e - 1][k - 1] * c1;
        pw[e][k] = s % p_;
      }
    return pw;
  };
  auto pa = powers(l[0], l[1]), pb = powers(l[2], l[3]);
  auto m = std::make_unique<FpMatrix>(p_, w, w);
  for (std::size_t j = 0; j < w; ++j) {
    const auto& x = pa[w - 1 - j];
    const auto& y = pb[j];
    std::vector<int> acc(w, 0);
    for (std::size_t s = 0; s + j < w; ++s)
      if (x[s])
        for (std::size_t t = 0; t <= j; ++t) acc[s + t] = (acc[s + t] + x[s] * y[t]) % p_;
    for (std::size_t k = 0; k < w; ++k) m->set(j, k, acc[k]);
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sym_.emplace(key, std::move(m)).first;
  return *it->second;
}

// res_D Tr_K^G phi^* = sum over double cosets DgK with D <= gKg^-1 of the
// pullback along d -> phi(g^-1 d g); transfers from proper subgroups of an
// elementary abelian D vanish in reduced cohomology.
std::vector<Cohomology::Term> Cohomology::compute_terms(const Hom& phi) const {
  const Group& g = *phi.src;
  const Group& h = *phi.dst;
  const auto& k = g.subgroup(phi.domain);
  std::vector<Term> out;
  for (std::size_t f = 0; f < g.frames().size(); ++f) {
    const Frame& d = g.frames()[f];
    const auto& del = g.subgroup(d.subgroup).elements;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int x = 0; x < g.order(); ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      for (int a : del)
        for (int b : k.elements) seen[static_cast<std::size_t>(g.mul(g.mul(a, x), b))] = 1;
      int xi = g.inv(x);
      bool inside = true;
      for (int e : del)
        if (!k.contains(g.conj(xi, e))) {
          inside = false;
          break;
        }
      if (!inside) continue;
      std::vector<int> gens;
      if (d.rank >= 1) gens.push_back(d.g1);
      if (d.rank >= 2) gens.push_back(d.g2);
      std::vector<int> imgs;
      for (int e : gens) imgs.push_back(phi(g.conj(xi, e)));
      int tf = h.frame_containing(imgs);
      if (tf < 0) throw std::logic_error("image of an elementary abelian subgroup lies in no frame");
      const Frame& t = h.frames()[static_cast<std::size_t>(tf)];
      std::array<int, 4> l{0, 0, 0, 0};
      for (std::size_t c = 0; c < imgs.size(); ++c) {
        auto im = static_cast<std::size_t>(imgs[c]);
        if (t.rank >= 1) l[c] = t.coord_y[im];
        if (t.rank >= 2) l[2 + c] = t.coord_u[im];
      }
      out.push_back(Term{f, static_cast<std::size_t>(tf), l});
    }
  }
  return out;
}

const std::vector<Cohomology::Term>& Cohomology::terms(const BisetSpace& s, int cls) const {
  auto key = std::make_pair(&s, cls);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = terms_.find(key);
    if (it != terms_.end()) return it->second;
  }
  auto t = compute_terms(s.rep(cls));
  std::lock_guard<std::mutex> lock(mu_);
  return terms_.emplace(key, std::move(t)).first->second;
}

namespace {

FpMatrix apply_terms(const std::vector<Cohomology::Term>& ts, const Cohomology& coh, const CohModel& src,
                     const CohModel& dst, const FpMatrix& rows, int n) {
  const int p = coh.p();
  const std::size_t r = rows.rows();
  const std::size_t wout = src.width(n);
  std::vector<int> acc(r * wout, 0);
  int pending = 0;
  auto flush = [&] {
    for (auto& a : acc) a %= p;
    pending = 0;
  };
  for (const auto& t : ts) {
    std::size_t wi = dst.frame_width(t.in_frame, n), wo = src.frame_width(t.out_frame, n);
    if (wi == 0 || wo == 0) continue;
    const FpMatrix& s = coh.sym(t.l, n);
    std::size_t oi = dst.offset(t.in_frame, n), oo = src.offset(t.out_frame, n);
    for (std::size_t i = 0; i < r; ++i) {
      const std::uint8_t* x = rows.row(i) + oi;
      int* out = acc.data() + i * wout + oo;
      for (std::size_t j = 0; j < wi; ++j) {
        int xj = x[j];
        if (!xj) continue;
        const std::uint8_t* srow = s.row(j);
        for (std::size_t k = 0; k < wo; ++k) out[k] += xj * srow[k];
      }
    }
    // each term adds at most (n+1) p^2 per entry
    pending += static_cast<int>(wi);
    if (pending > 1 << 16) flush();
  }
  flush();
  FpMatrix out(p, r, wout);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < wout; ++k) out.row(i)[k] = static_cast<std::uint8_t>(acc[i * wout + k]);
  return out;
}

}  // namespace

FpMatrix Cohomology::act_rows(const BisetSpace& s, int cls, const FpMatrix& rows, int n) const {
  const CohModel& dst = model(s.target());
  if (rows.cols() != dst.width(n)) throw std::invalid_argument("rows have wrong tuple width for the target");
  return apply_terms(terms(s, cls), *this, model(s.source()), dst, rows, n);
}

FpMatrix Cohomology::act_rows(const BisetElement& z, const FpMatrix& rows, int n) const {
  const CohModel& src = model(z.space->source());
  FpMatrix out(p_, rows.rows(), src.width(n));
  for (auto [c, a] : z.support()) out = out + act_rows(*z.space, c, rows, n).scaled(a);
  return out;
}

CohClass Cohomology::act_basis(const BisetSpace& s, int cls, const CohClass& x) const {
  if (x.model != &model(s.target())) throw std::invalid_argument("class does not live on the biset target");
  FpMatrix rows(p_, 0, x.v.size());
  rows.append_row(x.v);
  return CohClass{&model(s.source()), x.weight, act_rows(s, cls, rows, x.weight).row_vector(0)};
}

CohClass Cohomology::act(const BisetElement& z, const CohClass& x) const {
  if (x.model != &model(z.space->target())) throw std::invalid_argument("class does not live on the biset target");
  FpMatrix rows(p_, 0, x.v.size());
  rows.append_row(x.v);
  return CohClass{&model(z.space->source()), x.weight, act_rows(z, rows, x.weight).row_vector(0)};
}

CohClass Cohomology::pullback(const Hom& phi, const CohClass& x) const {
  if (phi.domain != phi.src->whole()) throw std::invalid_argument("pullback needs a map defined on the whole group");
  if (x.model != &model(*phi.dst)) throw std::invalid_argument("class does not live on the map's target");
  FpMatrix rows(p_, 0, x.v.size());
  rows.append_row(x.v);
  auto ts = compute_terms(phi);
  return CohClass{&model(*phi.src), x.weight,
                  apply_terms(ts, *this, model(*phi.src), model(*phi.dst), rows, x.weight).row_vector(0)};
}

namespace {

// frame of E identified with the standalone A along (g1, g2) -> (e1, e2)
std::vector<int> frame_iso(const Group& e, const Group& a, std::size_t frame, bool to_a) {
  const Frame& f = e.frames()[frame];
  std::vector<int> img(static_cast<std::size_t>(to_a ? e.order() : a.order()), -1);
  for (int x : e.subgroup(f.subgroup).elements) {
    auto ux = static_cast<std::size_t>(x);
    int ax = a.index({f.coord_y[ux], f.coord_u[ux], 0});
    if (to_a)
      img[ux] = ax;
    else
      img[static_cast<std::size_t>(ax)] = x;
  }
  return img;
}

}  // namespace

CohClass Cohomology::restrict_to_frame(const CohClass& x, std::size_t frame) const {
  const Group& e = ctx_->E();
  const Group& a = ctx_->A();
  Hom emb = make_hom(a, a.whole(), e, frame_iso(e, a, frame, false));
  return pullback(emb, x);
}

CohClass Cohomology::transfer(std::size_t frame, const CohClass& f) const {
  const Group& e = ctx_->E();
  const Group& a = ctx_->A();
  Hom iso = make_hom(e, e.frames()[frame].subgroup, a, frame_iso(e, a, frame, true));
  const BisetSpace& s = ctx_->space(e, a);
  return act_basis(s, s.class_of(iso), f);
}

namespace {

std::string label_of(const Group& g, const std::array<int, 4>& m) {
  std::ostringstream os;
  const char* names_e[] = {"y1", "y2", "C", "v"};
  const char* names_a[] = {"y", "u", "", ""};
  const char** names = g.kind() == GroupKind::extraspecial ? names_e : names_a;
  bool any = false;
  for (int t = 0; t < 4; ++t) {
    if (!m[static_cast<std::size_t>(t)]) continue;
    if (any) os << "*";
    os << names[t];
    if (m[static_cast<std::size_t>(t)] > 1) os << "^" << m[static_cast<std::size_t>(t)];
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

}  // namespace

std::unique_ptr<GradedPiece> Cohomology::build_piece(const Group& g, int n) const {
  auto gp = std::make_unique<GradedPiece>();
  gp->weight = n;
  const CohModel& m = model(g);
  gp->basis = FpMatrix(p_, 0, m.width(n));
  auto add = [&](const std::vector<std::uint8_t>& v, std::array<int, 4> mono) {
    gp->basis.append_row(v);
    gp->monomials.push_back(mono);
    gp->labels.push_back(label_of(g, mono));
  };
  if (g.kind() == GroupKind::extraspecial) {
    if (n == 0) {
      add(one(g).v, {0, 0, 0, 0});
    } else {
      Subspace span(p_, m.width(n));
      struct Gen {
        int w;
        int slot;
        CohClass x;
      };
      std::vector<Gen> gens{{1, 0, y1()}, {1, 1, y2()}, {p_ - 1, 2, C()}, {p_, 3, v()}};
      for (const auto& gen : gens) {
        if (n - gen.w < 0) continue;
        const GradedPiece& lower = piece(g, n - gen.w);
        for (std::size_t r = 0; r < lower.dim(); ++r) {
          CohClass x{&m, n - gen.w, lower.basis.row_vector(r)};
          CohClass y = x * gen.x;
          if (span.insert(y.v)) {
            auto mono = lower.monomials[r];
            ++mono[static_cast<std::size_t>(gen.slot)];
            add(y.v, mono);
          }
        }
      }
    }
  } else {
    std::size_t w = m.width(n);
    for (std::size_t j = 0; j < w; ++j) {
      std::vector<std::uint8_t> e(w, 0);
      e[j] = 1;
      std::array<int, 4> mono{0, 0, 0, 0};
      if (g.kind() == GroupKind::elementary_abelian) mono = {n - static_cast<int>(j), static_cast<int>(j), 0, 0};
      if (g.kind() == GroupKind::cyclic) mono = {n, 0, 0, 0};
      add(e, mono);
    }
  }
  gp->solver = std::make_shared<LeftSolver>(gp->basis);
  return gp;
}

const GradedPiece& Cohomology::piece(const Group& g, int n) const {
  if (n < 0) throw std::invalid_argument("negative weight");
  auto key = std::make_pair(&g, n);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = pieces_.find(key);
    if (it != pieces_.end()) return *it->second;
  }
  auto gp = build_piece(g, n);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = pieces_.find(key);
  if (it == pieces_.end()) it = pieces_.emplace(key, std::move(gp)).first;
  return *it->second;
}

FpMatrix Cohomology::coordinates(const Group& g, int n, const FpMatrix& rows) const {
  const GradedPiece& gp = piece(g, n);
  FpMatrix out(p_, 0, gp.dim());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    auto c = gp.solver->solve(rows.row_vector(r));
    if (!c) throw std::logic_error("tuple is not a cohomology class in weight " + std::to_string(n));
    out.append_row(*c);
  }
  return out;
}

std::vector<FpMatrix> Cohomology::action_matrices(const Group& g, int n, const std::vector<BisetElement>& gens) const {
  const GradedPiece& gp = piece(g, n);
  std::vector<FpMatrix> out;
  out.reserve(gens.size());
  for (const auto& z : gens) {
    if (&z.space->source() != &g || &z.space->target() != &g) throw std::invalid_argument("generator is not an endomorphism biset");
    out.push_back(coordinates(g, n, act_rows(z, gp.basis, n)));
  }
  return out;
}

}  // namespace burnside

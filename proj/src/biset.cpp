#include "burnside/biset.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "burnside/fp.hpp"

namespace burnside {

BisetSpace::BisetSpace(const Group& g, const Group& h) : g_(&g), h_(&h) {
  for (std::size_t s = 0; s < g.subgroups().size(); ++s) {
    int k = static_cast<int>(s);
    for (const Hom& phi : enumerate_homs(g, k, h)) {
      ++pair_count_;
      if (index_.count(key(phi))) continue;
      // walk the orbit, remember the least key and the conjugating pair that reaches it
      std::vector<std::string> orbit;
      std::string best;
      int bx = 0, by = 0;
      for (int x = 0; x < g.order(); ++x) {
        int kx = g.conjugate_subgroup(x, k);
        const auto& kxel = g.subgroup(kx).elements;
        int xi = g.inv(x);
        for (int y = 0; y < h.order(); ++y) {
          std::string s2;
          s2.reserve(2 * kxel.size() + 1);
          for (int e : kxel) s2.push_back(static_cast<char>(e));
          s2.push_back(static_cast<char>(-1));
          for (int e : kxel) s2.push_back(static_cast<char>(h.conj(y, phi(g.conj(xi, e)))));
          if (best.empty() || s2 < best) {
            best = s2;
            bx = x;
            by = y;
          }
          orbit.push_back(std::move(s2));
        }
      }
      int cls = static_cast<int>(reps_.size());
      for (auto& o : orbit) index_.emplace(std::move(o), cls);
      int kx = g.conjugate_subgroup(bx, k);
      std::vector<int> img(static_cast<std::size_t>(g.order()), -1);
      int xi = g.inv(bx);
      for (int e : g.subgroup(kx).elements) img[static_cast<std::size_t>(e)] = h.conj(by, phi(g.conj(xi, e)));
      reps_.push_back(make_hom(g, kx, h, std::move(img)));
    }
  }
}

std::string BisetSpace::key(const Hom& phi) const {
  const auto& el = g_->subgroup(phi.domain).elements;
  std::string s;
  s.reserve(2 * el.size() + 1);
  for (int e : el) s.push_back(static_cast<char>(e));
  s.push_back(static_cast<char>(-1));
  for (int e : el) s.push_back(static_cast<char>(phi(e)));
  return s;
}

int BisetSpace::class_of(const Hom& phi) const {
  if (phi.src != g_ || phi.dst != h_) throw std::invalid_argument("pair belongs to a different biset space");
  auto it = index_.find(key(phi));
  if (it == index_.end()) throw std::logic_error("pair missing from biset basis");
  return it->second;
}

std::string BisetSpace::label(int cls) const {
  const Hom& r = rep(cls);
  std::ostringstream os;
  os << "K" << g_->subgroup(r.domain).order() << "s" << r.domain << "->" << h_->name() << "|im"
     << h_->subgroup(r.image).order() << ":";
  bool first = true;
  for (int gen : g_->subgroup(r.domain).gens) {
    auto a = g_->element(gen), b = h_->element(r(gen));
    os << (first ? "" : ";") << a.i << a.j << a.k << ">" << b.i << b.j << b.k;
    first = false;
  }
  return os.str();
}

bool BisetElement::is_zero() const {
  return std::all_of(coeff.begin(), coeff.end(), [](std::uint8_t x) { return x == 0; });
}

BisetElement BisetElement::operator+(const BisetElement& o) const {
  if (space != o.space) throw std::invalid_argument("biset group mismatch in sum");
  BisetElement r = *this;
  int q = p();
  for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i] = static_cast<std::uint8_t>((coeff[i] + o.coeff[i]) % q);
  return r;
}

BisetElement BisetElement::operator-(const BisetElement& o) const { return *this + o.scaled(-1); }

BisetElement BisetElement::scaled(int s) const {
  BisetElement r = *this;
  int q = p();
  s = fp_reduce(s, q);
  for (auto& c : r.coeff) c = static_cast<std::uint8_t>(c * s % q);
  return r;
}

std::vector<std::pair<int, int>> BisetElement::support() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < coeff.size(); ++i)
    if (coeff[i]) out.emplace_back(static_cast<int>(i), coeff[i]);
  return out;
}

BisetContext::BisetContext(int p)
    : p_(p),
      e_(Group::extraspecial(p)),
      a_(Group::elementary_abelian(p)),
      q_(Group::cyclic(p)),
      one_(Group::trivial(p)) {}

const BisetSpace& BisetContext::space(const Group& g, const Group& h) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto k = std::make_pair(&g, &h);
  auto it = spaces_.find(k);
  if (it == spaces_.end()) it = spaces_.emplace(k, std::make_unique<BisetSpace>(g, h)).first;
  return *it->second;
}

BisetElement BisetContext::zero(const Group& g, const Group& h) const {
  const BisetSpace& s = space(g, h);
  return BisetElement{&s, std::vector<std::uint8_t>(s.dim(), 0)};
}

BisetElement BisetContext::basis(const Group& g, const Group& h, int cls) const {
  BisetElement z = zero(g, h);
  z.coeff[static_cast<std::size_t>(cls)] = 1;
  return z;
}

BisetElement BisetContext::basis_of(const Hom& phi) const {
  const BisetSpace& s = space(*phi.src, *phi.dst);
  return basis(*phi.src, *phi.dst, s.class_of(phi));
}

BisetElement BisetContext::identity(const Group& g) const { return basis_of(inclusion(g, g.whole())); }

BisetContext::Table& BisetContext::table(const BisetSpace& s2, const BisetSpace& s1) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto k = std::make_pair(&s2, &s1);
  auto it = tables_.find(k);
  if (it == tables_.end()) {
    auto t = std::make_unique<Table>();
    t->entries.resize(s2.dim() * s1.dim());
    it = tables_.emplace(k, std::move(t)).first;
  }
  return *it->second;
}

std::vector<std::pair<int, int>> BisetContext::compute_product(const BisetSpace& s2, int c2, const BisetSpace& s1,
                                                               int c1) const {
  const Hom& phi2 = s2.rep(c2);  // H2 <= G2 -> G3
  const Hom& phi1 = s1.rep(c1);  // H1 <= G1 -> G2
  const Group& g1 = s1.source();
  const Group& g2 = s1.target();
  const Group& g3 = s2.target();
  const BisetSpace& out = space(g1, g3);
  const auto& h1 = g1.subgroup(phi1.domain);
  const auto& im1 = g2.subgroup(phi1.image).elements;
  const auto& h2 = g2.subgroup(phi2.domain);
  std::vector<int> coeff(out.dim(), 0);
  std::vector<char> seen(static_cast<std::size_t>(g2.order()), 0);
  for (int x = 0; x < g2.order(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    for (int a : im1)
      for (int b : h2.elements) seen[static_cast<std::size_t>(g2.mul(g2.mul(a, x), b))] = 1;
    // K = phi1^-1(phi1(H1) cap x H2 x^-1), psi = phi2 c_{x^-1} phi1
    int xi = g2.inv(x);
    std::vector<char> member(static_cast<std::size_t>(g1.order()), 0);
    std::vector<int> img(static_cast<std::size_t>(g1.order()), -1);
    for (int k : h1.elements) {
      int t = g2.conj(xi, phi1(k));
      if (!h2.contains(t)) continue;
      member[static_cast<std::size_t>(k)] = 1;
      img[static_cast<std::size_t>(k)] = phi2(t);
    }
    int ks = g1.find_subgroup(member);
    Hom psi = make_hom(g1, ks, g3, std::move(img));
    ++coeff[static_cast<std::size_t>(out.class_of(psi))];
  }
  std::vector<std::pair<int, int>> r;
  for (std::size_t i = 0; i < coeff.size(); ++i)
    if (coeff[i] % p_) r.emplace_back(static_cast<int>(i), coeff[i] % p_);
  return r;
}

const std::vector<std::pair<int, int>>& BisetContext::basis_product(const BisetSpace& s2, int c2,
                                                                    const BisetSpace& s1, int c1) const {
  Table& t = table(s2, s1);
  std::size_t idx = static_cast<std::size_t>(c2) * s1.dim() + static_cast<std::size_t>(c1);
  {
    std::lock_guard<std::mutex> lock(t.mu);
    if (t.entries[idx]) return *t.entries[idx];
  }
  auto r = compute_product(s2, c2, s1, c1);
  std::lock_guard<std::mutex> lock(t.mu);
  // deterministic, so a concurrent fill with the same value is harmless
  if (!t.entries[idx]) t.entries[idx] = std::move(r);
  return *t.entries[idx];
}

BisetElement BisetContext::mul(const BisetElement& z2, const BisetElement& z1) const {
  if (&z1.space->target() != &z2.space->source()) throw std::invalid_argument("biset group mismatch in product");
  BisetElement out = zero(z1.space->source(), z2.space->target());
  std::vector<int> acc(out.coeff.size(), 0);
  auto s2 = z2.support(), s1 = z1.support();
  for (auto [c2, a2] : s2)
    for (auto [c1, a1] : s1) {
      int f = a2 * a1 % p_;
      for (auto [c, v] : basis_product(*z2.space, c2, *z1.space, c1))
        acc[static_cast<std::size_t>(c)] = (acc[static_cast<std::size_t>(c)] + f * v) % p_;
    }
  for (std::size_t i = 0; i < acc.size(); ++i) out.coeff[i] = static_cast<std::uint8_t>(acc[i]);
  return out;
}

BisetElement BisetContext::iota(const Group& g, const Mat2& m) const { return basis_of(out_lift(g, m)); }

BisetElement BisetContext::iota(const Group& g, const std::vector<std::uint8_t>& w) const {
  auto els = gl2_elements(p_);
  if (w.size() != els.size()) throw std::invalid_argument("group algebra vector has wrong length");
  BisetElement z = zero(g, g);
  for (std::size_t n = 0; n < els.size(); ++n)
    if (w[n]) z = z + iota(g, els[n]).scaled(w[n]);
  return z;
}

std::vector<std::uint8_t> BisetContext::pi(const BisetElement& z) const {
  const Group& g = z.space->source();
  if (&g != &z.space->target()) throw std::invalid_argument("pi needs an endomorphism algebra");
  std::vector<int> acc(gl2_elements(p_).size(), 0);
  for (auto [c, v] : z.support()) {
    const Hom& r = z.space->rep(c);
    if (r.domain != g.whole() || !r.injective()) continue;
    int n = gl2_index(induced_matrix(r), p_);
    acc[static_cast<std::size_t>(n)] = (acc[static_cast<std::size_t>(n)] + v) % p_;
  }
  return std::vector<std::uint8_t>(acc.begin(), acc.end());
}

bool BisetContext::in_ideal(const BisetSpace& s, int cls) const {
  const Hom& r = s.rep(cls);
  return r.dst->subgroup(r.image).order() < r.dst->order();
}

std::vector<int> BisetContext::ideal_classes(const Group& g) const {
  const BisetSpace& s = space(g, g);
  std::vector<int> out;
  for (std::size_t c = 0; c < s.dim(); ++c)
    if (in_ideal(s, static_cast<int>(c))) out.push_back(static_cast<int>(c));
  return out;
}

std::vector<int> BisetContext::out_classes(const Group& g) const {
  const BisetSpace& s = space(g, g);
  std::vector<int> out;
  for (std::size_t c = 0; c < s.dim(); ++c)
    if (!in_ideal(s, static_cast<int>(c))) out.push_back(static_cast<int>(c));
  return out;
}

BisetContext::IdealGenerators BisetContext::ideal_generators_E() const {
  const Group& e = E();
  const BisetSpace& s = space(e, e);
  const int p2 = p_ * p_;
  IdealGenerators out;
  for (std::size_t c = 0; c < s.dim(); ++c) {
    const Hom& r = s.rep(static_cast<int>(c));
    int ko = e.subgroup(r.domain).order(), io = e.subgroup(r.image).order();
    if (ko == p2 && r.injective()) out.i0.push_back(static_cast<int>(c));
    if (r.domain == e.whole() && io == p2) out.i1.push_back(static_cast<int>(c));
    if (io == 1) out.triv.push_back(static_cast<int>(c));
  }
  return out;
}

std::vector<BisetElement> BisetContext::action_family(const Group& g) const {
  std::vector<BisetElement> fam;
  for (const Mat2& m : gl2_generators(p_)) fam.push_back(iota(g, m));
  const BisetSpace& s = space(g, g);
  if (&g == e_.get()) {
    auto ig = ideal_generators_E();
    for (int c : ig.i0) fam.push_back(basis(g, g, c));
    for (int c : ig.i1) fam.push_back(basis(g, g, c));
    fam.push_back(basis_of(trivial_hom(g, g.whole(), g)));
  } else if (&g == a_.get()) {
    // surjections onto order-p subgroups, injections of order-p subgroups, one trivial biset
    for (std::size_t c = 0; c < s.dim(); ++c) {
      const Hom& r = s.rep(static_cast<int>(c));
      if (r.domain == g.whole() && g.subgroup(r.image).order() == p_) fam.push_back(basis(g, g, static_cast<int>(c)));
    }
    for (std::size_t c = 0; c < s.dim(); ++c) {
      const Hom& r = s.rep(static_cast<int>(c));
      int ko = g.subgroup(r.domain).order();
      if (ko == p_ && r.injective()) fam.push_back(basis(g, g, static_cast<int>(c)));
    }
    fam.push_back(basis_of(trivial_hom(g, g.whole(), g)));
  } else {
    throw std::invalid_argument("action family is defined for E and A only");
  }
  return fam;
}

void BisetContext::dump_csv(const Group& g, std::ostream& os) const {
  const BisetSpace& s = space(g, g);
  os << "basis_i,basis_j";
  for (std::size_t k = 0; k < s.dim(); ++k) os << ",coeff_" << k;
  os << "\n";
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      std::vector<int> row(s.dim(), 0);
      for (auto [c, v] : basis_product(s, static_cast<int>(i), s, static_cast<int>(j)))
        row[static_cast<std::size_t>(c)] = v;
      os << i << "," << j;
      for (int v : row) os << "," << v;
      os << "\n";
    }
}

namespace {

std::size_t spin_dim(const BisetContext& ctx, std::vector<BisetElement> seeds,
                     const std::vector<BisetElement>& left, const std::vector<BisetElement>& right) {
  if (seeds.empty()) return 0;
  const BisetSpace* sp = seeds.front().space;
  Subspace span(ctx.p(), sp->dim());
  std::deque<BisetElement> queue;
  for (auto& z : seeds)
    if (span.insert(z.coeff)) queue.push_back(z);
  while (!queue.empty()) {
    BisetElement z = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : right) {
      BisetElement w = ctx.mul(z, g);
      if (span.insert(w.coeff)) queue.push_back(std::move(w));
    }
    for (const auto& g : left) {
      BisetElement w = ctx.mul(g, z);
      if (span.insert(w.coeff)) queue.push_back(std::move(w));
    }
  }
  return span.dim();
}

}  // namespace

std::size_t generated_algebra_dim(const BisetContext& ctx, const std::vector<BisetElement>& gens) {
  if (gens.empty()) return 0;
  const Group& g = gens.front().space->source();
  return spin_dim(ctx, {ctx.identity(g)}, {}, gens);
}

std::size_t generated_ideal_dim(const BisetContext& ctx, const Group& g, const std::vector<BisetElement>& gens) {
  const BisetSpace& s = ctx.space(g, g);
  std::vector<BisetElement> all;
  for (std::size_t c = 0; c < s.dim(); ++c) all.push_back(ctx.basis(g, g, static_cast<int>(c)));
  return spin_dim(ctx, gens, all, all);
}

}  // namespace burnside

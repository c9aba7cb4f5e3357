#include "burnside/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "burnside/fp.hpp"

namespace burnside {

namespace {

int mod(int x, int p) { return fp_reduce(x, p); }

}  // namespace

Group::Group(GroupKind kind, int p) : kind_(kind), p_(p) {
  require_odd_prime(p);
  int rank = 0;
  switch (kind) {
    case GroupKind::extraspecial: rank = 3; name_ = "E"; break;
    case GroupKind::elementary_abelian: rank = 2; name_ = "A"; break;
    case GroupKind::cyclic: rank = 1; name_ = "Q"; break;
    case GroupKind::trivial: rank = 0; name_ = "1"; break;
  }
  order_ = 1;
  for (int r = 0; r < rank; ++r) order_ *= p;
  elements_.resize(static_cast<std::size_t>(order_));
  lookup_.assign(static_cast<std::size_t>(p * p * p), -1);
  for (int x = 0; x < order_; ++x) {
    GroupElement e{x % p, (x / p) % p, x / (p * p)};
    if (rank < 3) e.k = 0;
    if (rank < 2) e.j = 0;
    elements_[static_cast<std::size_t>(x)] = e;
    lookup_[static_cast<std::size_t>(e.i + p * e.j + p * p * e.k)] = x;
  }
  table_.resize(static_cast<std::size_t>(order_ * order_));
  inverse_.resize(static_cast<std::size_t>(order_));
  for (int x = 0; x < order_; ++x) {
    for (int y = 0; y < order_; ++y) {
      const auto& a = elements_[static_cast<std::size_t>(x)];
      const auto& b = elements_[static_cast<std::size_t>(y)];
      GroupElement c{mod(a.i + b.i, p), mod(a.j + b.j, p), 0};
      if (kind == GroupKind::extraspecial) c.k = mod(a.k + b.k + a.i * b.j, p);
      int z = index(c);
      table_[static_cast<std::size_t>(x * order_ + y)] = z;
      if (z == 0) inverse_[static_cast<std::size_t>(x)] = y;
    }
  }
  build_subgroups();
  build_frames();
}

std::shared_ptr<const Group> Group::extraspecial(int p) {
  return std::shared_ptr<const Group>(new Group(GroupKind::extraspecial, p));
}
std::shared_ptr<const Group> Group::elementary_abelian(int p) {
  return std::shared_ptr<const Group>(new Group(GroupKind::elementary_abelian, p));
}
std::shared_ptr<const Group> Group::cyclic(int p) {
  return std::shared_ptr<const Group>(new Group(GroupKind::cyclic, p));
}
std::shared_ptr<const Group> Group::trivial(int p) {
  return std::shared_ptr<const Group>(new Group(GroupKind::trivial, p));
}

int Group::index(const GroupElement& e) const {
  int i = mod(e.i, p_), j = mod(e.j, p_), k = mod(e.k, p_);
  int x = lookup_[static_cast<std::size_t>(i + p_ * j + p_ * p_ * k)];
  if (x < 0) throw std::invalid_argument("element not in group " + name_);
  return x;
}

int Group::pow(int x, int e) const {
  e = mod(e, p_);  // every group here has exponent p
  int r = 0;
  for (int t = 0; t < e; ++t) r = mul(r, x);
  return r;
}

int Group::closure(const std::vector<int>& gens) const {
  std::vector<char> member(static_cast<std::size_t>(order_), 0);
  std::vector<int> elems{0};
  member[0] = 1;
  for (std::size_t n = 0; n < elems.size(); ++n) {
    for (int g : gens) {
      int y = mul(elems[n], g);
      if (!member[static_cast<std::size_t>(y)]) {
        member[static_cast<std::size_t>(y)] = 1;
        elems.push_back(y);
      }
    }
  }
  return find_subgroup(member);
}

int Group::find_subgroup(const std::vector<char>& member) const {
  for (std::size_t s = 0; s < subgroups_.size(); ++s)
    if (subgroups_[s].member == member) return static_cast<int>(s);
  return -1;
}

void Group::build_subgroups() {
  std::map<std::vector<char>, std::vector<int>> found;
  auto gen_closure = [&](const std::vector<int>& gens) {
    std::vector<char> member(static_cast<std::size_t>(order_), 0);
    std::vector<int> elems{0};
    member[0] = 1;
    for (std::size_t n = 0; n < elems.size(); ++n)
      for (int g : gens) {
        int y = mul(elems[n], g);
        if (!member[static_cast<std::size_t>(y)]) {
          member[static_cast<std::size_t>(y)] = 1;
          elems.push_back(y);
        }
      }
    return member;
  };
  // every subgroup of these groups is generated by at most two elements
  for (int x = 0; x < order_; ++x) {
    auto m = gen_closure({x});
    std::vector<int> g;
    if (x != 0) g.push_back(x);
    found.emplace(m, g);
  }
  for (int x = 0; x < order_; ++x)
    for (int y = x + 1; y < order_; ++y) {
      auto m = gen_closure({x, y});
      found.emplace(m, std::vector<int>{x, y});
    }
  subgroups_.clear();
  for (auto& [member, gens] : found) {
    Subgroup s;
    s.member = member;
    for (int x = 0; x < order_; ++x)
      if (member[static_cast<std::size_t>(x)]) s.elements.push_back(x);
    s.gens = gens;
    subgroups_.push_back(std::move(s));
  }
  std::sort(subgroups_.begin(), subgroups_.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  trivial_sub_ = 0;
  whole_ = static_cast<int>(subgroups_.size()) - 1;
  auto& w = subgroups_[static_cast<std::size_t>(whole_)];
  if (kind_ == GroupKind::extraspecial || kind_ == GroupKind::elementary_abelian)
    w.gens = {index({1, 0, 0}), index({0, 1, 0})};
  else if (kind_ == GroupKind::cyclic)
    w.gens = {index({1, 0, 0})};
  // center
  std::vector<char> zc(static_cast<std::size_t>(order_), 0);
  for (int x = 0; x < order_; ++x) {
    bool central = true;
    for (int y = 0; y < order_ && central; ++y) central = mul(x, y) == mul(y, x);
    zc[static_cast<std::size_t>(x)] = central;
  }
  center_ = find_subgroup(zc);
}

bool Group::is_abelian_subgroup(int s) const {
  const auto& el = subgroup(s).elements;
  for (int x : el)
    for (int y : el)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

int Group::conjugate_subgroup(int x, int s) const {
  std::vector<char> m(static_cast<std::size_t>(order_), 0);
  for (int k : subgroup(s).elements) m[static_cast<std::size_t>(conj(x, k))] = 1;
  return find_subgroup(m);
}

void Group::build_frames() {
  frames_.clear();
  auto add = [&](int rank, int g1, int g2, std::string label) {
    Frame f;
    f.rank = rank;
    f.g1 = g1;
    f.g2 = g2;
    f.label = std::move(label);
    f.coord_y.assign(static_cast<std::size_t>(order_), -1);
    f.coord_u.assign(static_cast<std::size_t>(order_), -1);
    std::vector<int> gens;
    int sy = rank >= 1 ? p_ : 1, su = rank >= 2 ? p_ : 1;
    for (int s = 0; s < sy; ++s)
      for (int t = 0; t < su; ++t) {
        int x = mul(pow(g1, s), pow(g2, t));
        f.coord_y[static_cast<std::size_t>(x)] = s;
        f.coord_u[static_cast<std::size_t>(x)] = t;
      }
    if (rank >= 1) gens.push_back(g1);
    if (rank >= 2) gens.push_back(g2);
    f.subgroup = closure(gens);
    frames_.push_back(std::move(f));
  };
  switch (kind_) {
    case GroupKind::extraspecial: {
      int c = index({0, 0, 1});
      for (int i = 0; i < p_; ++i) add(2, index({1, i, i}), c, "A" + std::to_string(i));
      add(2, index({0, 1, 0}), c, "Ainf");
      break;
    }
    case GroupKind::elementary_abelian:
      add(2, index({1, 0, 0}), index({0, 1, 0}), "A");
      break;
    case GroupKind::cyclic:
      add(1, index({1, 0, 0}), 0, "Q");
      break;
    case GroupKind::trivial:
      add(0, 0, 0, "1");
      break;
  }
}

int Group::frame_of_subgroup(int s) const {
  for (std::size_t f = 0; f < frames_.size(); ++f)
    if (frames_[f].subgroup == s) return static_cast<int>(f);
  return -1;
}

int Group::frame_containing(const std::vector<int>& elems) const {
  for (std::size_t f = 0; f < frames_.size(); ++f) {
    bool ok = true;
    for (int x : elems)
      if (frames_[f].coord_y[static_cast<std::size_t>(x)] < 0) {
        ok = false;
        break;
      }
    if (ok) return static_cast<int>(f);
  }
  return -1;
}

namespace {

void finish_hom(Hom& h) {
  std::vector<char> m(static_cast<std::size_t>(h.dst->order()), 0);
  for (int x : h.src->subgroup(h.domain).elements) m[static_cast<std::size_t>(h.img[static_cast<std::size_t>(x)])] = 1;
  h.image = h.dst->find_subgroup(m);
  h.kernel_order = h.src->subgroup(h.domain).order() / h.dst->subgroup(h.image).order();
}

}  // namespace

Hom make_hom(const Group& src, int domain, const Group& dst, std::vector<int> img) {
  Hom h;
  h.src = &src;
  h.dst = &dst;
  h.domain = domain;
  h.img = std::move(img);
  const auto& sub = src.subgroup(domain);
  for (int x = 0; x < src.order(); ++x)
    if (!sub.contains(x)) h.img[static_cast<std::size_t>(x)] = -1;
  finish_hom(h);
  return h;
}

std::optional<Hom> hom_from_generators(const Group& src, int domain, const Group& dst,
                                       const std::vector<int>& gen_images) {
  const auto& gens = src.subgroup(domain).gens;
  if (gens.size() != gen_images.size()) throw std::invalid_argument("generator count mismatch");
  Hom h;
  h.src = &src;
  h.dst = &dst;
  h.domain = domain;
  h.img.assign(static_cast<std::size_t>(src.order()), -1);
  h.img[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t t = 0; t < gens.size(); ++t) {
      int y = src.mul(x, gens[t]);
      int val = dst.mul(h.img[static_cast<std::size_t>(x)], gen_images[t]);
      int& cur = h.img[static_cast<std::size_t>(y)];
      if (cur < 0) {
        cur = val;
        queue.push_back(y);
      } else if (cur != val) {
        return std::nullopt;
      }
    }
  }
  finish_hom(h);
  return h;
}

std::vector<Hom> enumerate_homs(const Group& src, int domain, const Group& dst) {
  std::vector<Hom> out;
  const auto ngen = src.subgroup(domain).gens.size();
  std::vector<int> imgs(ngen, 0);
  const int n = dst.order();
  while (true) {
    if (auto h = hom_from_generators(src, domain, dst, imgs)) out.push_back(std::move(*h));
    std::size_t t = 0;
    while (t < ngen && ++imgs[t] == n) imgs[t++] = 0;
    if (t == ngen) break;
  }
  return out;
}

bool is_homomorphism(const Hom& h) {
  const auto& el = h.src->subgroup(h.domain).elements;
  for (int x : el)
    for (int y : el)
      if (h(h.src->mul(x, y)) != h.dst->mul(h(x), h(y))) return false;
  return true;
}

Hom compose(const Hom& f, const Hom& g) {
  if (g.dst != f.src) throw std::invalid_argument("composition across different groups");
  Hom h;
  h.src = g.src;
  h.dst = f.dst;
  h.domain = g.domain;
  h.img.assign(static_cast<std::size_t>(g.src->order()), -1);
  for (int x : g.src->subgroup(g.domain).elements) {
    int y = g(x);
    if (!f.src->subgroup(f.domain).contains(y)) throw std::invalid_argument("image outside domain in compose");
    h.img[static_cast<std::size_t>(x)] = f(y);
  }
  finish_hom(h);
  return h;
}

Hom restrict_hom(const Hom& h, int sub) {
  Hom r;
  r.src = h.src;
  r.dst = h.dst;
  r.domain = sub;
  r.img.assign(h.img.size(), -1);
  for (int x : h.src->subgroup(sub).elements) {
    if (h.img[static_cast<std::size_t>(x)] < 0) throw std::invalid_argument("restriction outside domain");
    r.img[static_cast<std::size_t>(x)] = h.img[static_cast<std::size_t>(x)];
  }
  finish_hom(r);
  return r;
}

Hom inclusion(const Group& g, int sub) {
  Hom h;
  h.src = &g;
  h.dst = &g;
  h.domain = sub;
  h.img.assign(static_cast<std::size_t>(g.order()), -1);
  for (int x : g.subgroup(sub).elements) h.img[static_cast<std::size_t>(x)] = x;
  finish_hom(h);
  return h;
}

Hom conjugation(const Group& g, int x, int sub) {
  Hom h;
  h.src = &g;
  h.dst = &g;
  h.domain = sub;
  h.img.assign(static_cast<std::size_t>(g.order()), -1);
  for (int k : g.subgroup(sub).elements) h.img[static_cast<std::size_t>(k)] = g.conj(x, k);
  finish_hom(h);
  return h;
}

Hom trivial_hom(const Group& src, int domain, const Group& dst) {
  Hom h;
  h.src = &src;
  h.dst = &dst;
  h.domain = domain;
  h.img.assign(static_cast<std::size_t>(src.order()), -1);
  for (int k : src.subgroup(domain).elements) h.img[static_cast<std::size_t>(k)] = 0;
  finish_hom(h);
  return h;
}

bool Mat2::operator<(const Mat2& o) const {
  return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
}

Mat2 mat2_mul(const Mat2& x, const Mat2& y, int p) {
  return {fp_reduce(x.a * y.a + x.b * y.c, p), fp_reduce(x.a * y.b + x.b * y.d, p),
          fp_reduce(x.c * y.a + x.d * y.c, p), fp_reduce(x.c * y.b + x.d * y.d, p)};
}

int mat2_det(const Mat2& x, int p) { return fp_reduce(x.a * x.d - x.b * x.c, p); }

Mat2 mat2_inv(const Mat2& x, int p) {
  int di = fp_inv(mat2_det(x, p), p);
  return {fp_reduce(x.d * di, p), fp_reduce(-x.b * di, p), fp_reduce(-x.c * di, p), fp_reduce(x.a * di, p)};
}

std::vector<Mat2> gl2_elements(int p) {
  std::vector<Mat2> out;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if (fp_reduce(a * d - b * c, p) != 0) out.push_back({a, b, c, d});
  return out;
}

int gl2_index(const Mat2& m, int p) {
  static std::mutex mu;
  static std::map<int, std::vector<int>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(p);
  if (it == tables.end()) {
    std::vector<int> t(static_cast<std::size_t>(p * p * p * p), -1);
    auto els = gl2_elements(p);
    for (std::size_t n = 0; n < els.size(); ++n) {
      const auto& e = els[n];
      t[static_cast<std::size_t>(((e.a * p + e.b) * p + e.c) * p + e.d)] = static_cast<int>(n);
    }
    it = tables.emplace(p, std::move(t)).first;
  }
  return it->second[static_cast<std::size_t>(((m.a * p + m.b) * p + m.c) * p + m.d)];
}

int primitive_root(int p) {
  for (int w = 2; w < p; ++w) {
    bool ok = true;
    for (int e = 1; e < p - 1 && ok; ++e) ok = fp_pow(w, e, p) != 1;
    if (ok) return w;
  }
  return 1;  // unreachable for odd primes
}

std::array<Mat2, 2> gl2_generators(int p) {
  return {Mat2{primitive_root(p), 0, 0, 1}, Mat2{p - 1, 1, p - 1, 0}};
}

Hom out_lift(const Group& e, const Mat2& g) {
  if (e.kind() != GroupKind::extraspecial && e.kind() != GroupKind::elementary_abelian)
    throw std::invalid_argument("out_lift needs a rank-two group");
  int p = e.p();
  if (mat2_det(g, p) == 0) throw std::invalid_argument("singular matrix in out_lift");
  bool ex = e.kind() == GroupKind::extraspecial;
  int ga = e.index({g.a, g.c, ex ? g.a * g.c : 0});
  int gb = e.index({g.b, g.d, ex ? g.b * g.d : 0});
  auto h = hom_from_generators(e, e.whole(), e, {ga, gb});
  if (!h) throw std::logic_error("out_lift failed to define a homomorphism");
  return *h;
}

Mat2 induced_matrix(const Hom& aut) {
  const Group& e = *aut.src;
  auto ia = e.element(aut(e.index({1, 0, 0})));
  auto ib = e.element(aut(e.index({0, 1, 0})));
  return {ia.i, ib.i, ia.j, ib.j};
}

bool is_inner(const Hom& aut) {
  const Group& e = *aut.src;
  for (int g = 0; g < e.order(); ++g) {
    bool ok = true;
    for (int x = 0; x < e.order() && ok; ++x) ok = aut(x) == e.conj(g, x);
    if (ok) return true;
  }
  return false;
}

}  // namespace burnside

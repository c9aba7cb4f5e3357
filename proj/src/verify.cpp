#include "burnside/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace burnside {

int default_max_weight(int p) {
  if (p == 3) return 40;
  if (p == 5) return 24;
  return 16;
}

Workbench::Workbench(Settings s) : s_(s) {
  ctx_ = std::make_unique<BisetContext>(s_.p);
  coh_ = std::make_unique<Cohomology>(*ctx_);
  sub_ = std::make_unique<Subspaces>(*coh_);
  rt_ = std::make_unique<RankTwo>(*sub_);
}

const Simples& Workbench::simples() {
  if (!sim_) sim_ = std::make_unique<Simples>(*ctx_);
  return *sim_;
}

const Census& Workbench::census() {
  if (!census_) census_ = std::make_unique<Census>(*coh_, simples());
  return *census_;
}

bool CaseResult::passed() const { return error.empty() && !rows.empty() && failures() == 0; }

std::size_t CaseResult::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.match; }));
}

const std::vector<CaseInfo>& verification_cases() {
  static const std::vector<CaseInfo> cases{
      {"cohomology-dimensions", "dim H^{2n}(E) equals the coefficient of the generating function"},
      {"ring-relations", "relations among y1, y2, C, v; GL_2 action on generators; spans of linear forms"},
      {"ideal-generation", "J(E) has codimension |GL_2| and is generated by the rank-two and trivial bisets"},
      {"transfer-closed-forms", "transfers of u^k and (y^{p-1}-u^{p-1})^n from each maximal elementary abelian"},
      {"stable-decomposition", "the four families of stable subspaces give a direct sum decomposition of H^{2n}(E)"},
      {"cyclic-trivial-twist-isotypic", "CA{M_0}/CA{VM_0} is a sum of S(E,Q,U_0), with no copies outside"},
      {"cyclic-twisted-isotypic", "Z_i/CA{v^iM_0+VM_i} is a sum of S(E,Q,U_i), with no copies outside"},
      {"rank-two-isotypic", "DA{D2 N_0} and DA{v^m N_m} are sums of S(E,A,S^{p-1} det^m), with no copies outside"},
      {"rank-two-induction", "(D1~^i D2~^j d2^m W_n) A_p(E,A) = D1^i D2^j v^m C^n M_m, a simple module"},
      {"simple-census", "composition factors of H^+(E) are exactly the positive-degree simples"},
      {"summand-series", "multiplicity series of each simple equals the closed-form subspace series"},
      {"rank-two-census", "composition factors of H^+(A) are the simple A_p(A,A)-modules"},
      {"rank-two-chain", "H*(A) > L*(Q) > d2 H*(A) with the stated factors, and d2 H*(A) J(A) = 0"},
      {"rank-two-steinberg", "Dickson congruences, W_j complements and the Steinberg-isotypic submodules of H*(A)"},
      {"structural", "associativity, module axiom, Frobenius reciprocity, seed independence"},
  };
  return cases;
}

bool is_case(const std::string& id) {
  const auto& cs = verification_cases();
  return std::any_of(cs.begin(), cs.end(), [&](const CaseInfo& c) { return c.id == id; });
}

std::vector<DimRow> dimension_table(const Cohomology& coh, int max_weight) {
  auto series = hilbert_series_E(coh.p(), max_weight);
  std::vector<DimRow> out;
  for (int n = 0; n <= max_weight; ++n)
    out.push_back(DimRow{n, static_cast<long long>(coh.he_basis(n).dim()), series[static_cast<std::size_t>(n)]});
  return out;
}

namespace {

std::string describe(const std::vector<IdentifiedFactor>& fs) {
  if (fs.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (k) os << " + ";
    os << fs[k].multiplicity << "x" << (fs[k].id ? fs[k].id->name() : "unknown(dim " + std::to_string(fs[k].dim) + ")");
  }
  return os.str();
}

// factors (with multiplicity) other than id
int others(const std::vector<IdentifiedFactor>& fs, const SimpleId& id) {
  int n = 0;
  for (const auto& f : fs)
    if (!f.id || !(*f.id == id)) n += f.multiplicity;
  return n;
}

Module first_gens(const Module& m, std::size_t k) {
  Module out{m.p, m.dim, {}};
  for (std::size_t t = 0; t < k && t < m.gens.size(); ++t) out.gens.push_back(m.gens[t]);
  return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

class Runner {
 public:
  Runner(Workbench& wb, CaseResult& r) : wb_(wb), r_(r) {}

  void add(const std::string& check, std::optional<int> weight, const std::string& computed, const std::string& expected,
           bool match) {
    r_.rows.push_back(CheckRow{check, weight, computed, expected, match});
  }
  void same(const std::string& check, std::optional<int> weight, const std::string& computed, const std::string& expected) {
    add(check, weight, computed, expected, computed == expected);
  }
  void num(const std::string& check, std::optional<int> weight, long long computed, long long expected) {
    add(check, weight, std::to_string(computed), std::to_string(expected), computed == expected);
  }
  void holds(const std::string& check, std::optional<int> weight, bool ok) { add(check, weight, yes(ok), "yes", ok); }

  Workbench& wb() { return wb_; }
  int p() const { return wb_.p(); }
  int N() const { return wb_.settings().max_weight; }
  int NA() const { return std::min(wb_.settings().a_max_weight, wb_.settings().max_weight); }
  std::uint64_t seed() const { return wb_.settings().seed; }
  const BisetContext& ctx() const { return wb_.ctx(); }
  const Cohomology& coh() const { return wb_.coh(); }
  const Subspaces& sub() const { return wb_.sub(); }
  const RankTwo& rt() const { return wb_.rank_two(); }
  const Group& E() const { return ctx().E(); }
  const Group& A() const { return ctx().A(); }
  FpMatrix whole(const Group& g, int n) const { return coh().piece(g, n).basis; }
  FpMatrix empty(const Group& g, int n) const { return FpMatrix(p(), 0, coh().model(g).width(n)); }

  std::vector<IdentifiedFactor> factors(const Group& g, int n, const FpMatrix& upper, const FpMatrix& lower) {
    Module m = wb_.census().slice_module(g, n, upper, lower);
    return identify_factors(wb_.simples(), g, m, seed() + 7919ULL * static_cast<std::uint64_t>(n));
  }

  // upper/lower isotypic for id; the complement pieces carry no copy of id
  void isotypic(const std::string& name, const SimpleId& id, const Group& g, int n, const FpMatrix& upper,
                const FpMatrix& lower) {
    auto fs = factors(g, n, upper, lower);
    int o = others(fs, id);
    long long dim = static_cast<long long>(upper.rows() - lower.rows());
    bool ok = o == 0 && multiplicity_of(fs, id) * id.expected_dim(p()) == dim;
    add(name + " is isotypic", n, describe(fs), "only " + id.name(), ok);
  }
  void free_of(const std::string& name, const SimpleId& id, const Group& g, int n, const FpMatrix& upper,
               const FpMatrix& lower) {
    auto fs = factors(g, n, upper, lower);
    int m = multiplicity_of(fs, id);
    add(name + " has no " + id.name(), n, std::to_string(m), "0", m == 0);
  }

 private:
  Workbench& wb_;
  CaseResult& r_;
};

// ---------------------------------------------------------------------------

void case_dimensions(Runner& r) {
  for (const auto& row : dimension_table(r.coh(), r.N())) r.num("dim H^2n(E)", row.weight, row.computed, row.expected);
}

void case_ring_relations(Runner& r) {
  const Cohomology& c = r.coh();
  const Subspaces& sub = r.sub();
  const int p = r.p();
  CohClass y1 = c.y1(), y2 = c.y2(), C = c.C(), v = c.v();
  r.holds("y1^p y2 = y1 y2^p", p + 1, y1.pow(p) * y2 == y1 * y2.pow(p));
  r.holds("C y1 = y1^p", p, C * y1 == y1.pow(p));
  r.holds("C y2 = y2^p", p, C * y2 == y2.pow(p));
  r.holds("C^2 = y1^(2p-2) + y2^(2p-2) - y1^(p-1) y2^(p-1)", 2 * p - 2,
          C * C == y1.pow(2 * p - 2) + y2.pow(2 * p - 2) - y1.pow(p - 1) * y2.pow(p - 1));
  r.holds("q*(y) = y1", 1, c.pullback(c.quotient_map(), c.ay()) == y1);
  r.holds("q*(u) = y2", 1, c.pullback(c.quotient_map(), c.au()) == y2);

  int bad_lin = 0, bad_c = 0, bad_v = 0;
  for (const Mat2& g : gl2_elements(p)) {
    Hom h = out_lift(r.E(), g);
    if (!(c.pullback(h, y1) == y1.scaled(g.a) + y2.scaled(g.b)) || !(c.pullback(h, y2) == y1.scaled(g.c) + y2.scaled(g.d)))
      ++bad_lin;
    if (!(c.pullback(h, C) == C)) ++bad_c;
    if (!(c.pullback(h, v) == v.scaled(mat2_det(g, p)))) ++bad_v;
  }
  r.num("g*y1 = a y1 + b y2, g*y2 = c y1 + d y2: failures over GL_2", 1, bad_lin, 0);
  r.num("g*C = C: failures over GL_2", p - 1, bad_c, 0);
  r.num("g*v = det(g) v: failures over GL_2", p, bad_v, 0);

  for (int i = 0; i <= p - 1; ++i) {
    std::vector<CohClass> forms;
    for (int k = 0; k <= i; ++k) forms.push_back((y1 + y2.scaled(k)).pow(i));
    FpMatrix span = row_basis(span_of(forms, c.model(r.E()).width(i), p));
    FpMatrix si = sub.slice(Span{Ring::scalars, sub.S(i)}, i);
    r.add("(y1 + k y2)^i, k = 0..i, span S^i", i, std::to_string(span.rows()) + (subspace_equal(span, si) ? " equal" : " differ"),
          std::to_string(i + 1) + " equal", span.rows() == static_cast<std::size_t>(i + 1) && subspace_equal(span, si));
  }

  for (int n = p; n <= 2 * p; ++n) {
    int bad = 0;
    for (int l1 = 0; l1 < p; ++l1)
      for (int l2 = 0; l2 < p; ++l2) {
        CohClass lin = y1.scaled(l1) + y2.scaled(l2);
        if (!(lin.pow(n) == C * lin.pow(n - p + 1))) ++bad;
      }
    r.num("(l1 y1 + l2 y2)^n = C (l1 y1 + l2 y2)^(n-p+1): failures", n, bad, 0);
  }

  // pullbacks of H^+(Q) along E -> Q span F_p[C]{S^1 + ... + S^(p-1)}
  auto homs = enumerate_homs(r.E(), r.E().whole(), r.ctx().Q());
  std::vector<CohClass> si;
  for (int i = 1; i <= p - 1; ++i) si = Subspaces::join(si, sub.S(i));
  for (int n = 1; n <= r.N(); ++n) {
    std::vector<CohClass> pulled;
    CohClass x = c.qy().pow(n);
    for (const auto& h : homs) pulled.push_back(c.pullback(h, x));
    FpMatrix lhs = row_basis(span_of(pulled, c.model(r.E()).width(n), p));
    FpMatrix rhs = sub.slice(Span{Ring::C, si}, n);
    r.add("sum of phi*H(Q) = Fp[C]{S^1..S^(p-1)}", n, std::to_string(lhs.rows()), std::to_string(rhs.rows()),
          subspace_equal(lhs, rhs));
  }

  std::vector<CohClass> cpow;
  for (int k = 0; k <= p; ++k) cpow.push_back(C.pow(k));
  for (int n = 1; n <= r.N(); ++n) {
    FpMatrix ca = sub.slice(Span{Ring::CA, sub.scalars()}, n);
    FpMatrix da = sub.slice(Span{Ring::DA, cpow}, n);
    r.add("CA = DA{1, C, ..., C^p}", n, std::to_string(da.rows()), std::to_string(ca.rows()), subspace_equal(ca, da));
  }
}

void case_ideal_generation(Runner& r) {
  const BisetContext& ctx = r.ctx();
  const int p = r.p();
  const long long gl2 = static_cast<long long>(p * p - 1) * (p * p - p);
  r.num("dim A(Q,Q)", std::nullopt, static_cast<long long>(ctx.space(ctx.Q(), ctx.Q()).dim()), 1 + p);
  for (const Group* g : {&ctx.E(), &ctx.A()}) {
    const BisetSpace& s = ctx.space(*g, *g);
    long long j = static_cast<long long>(ctx.ideal_classes(*g).size());
    r.num("codim J(" + g->name() + ")", std::nullopt, static_cast<long long>(s.dim()) - j, gl2);
    auto fam = r.wb().simples().family(*g);
    r.num("algebra generated by the action family of A_p(" + g->name() + "," + g->name() + ")", std::nullopt,
          static_cast<long long>(generated_algebra_dim(ctx, fam)), static_cast<long long>(s.dim()));
  }
  auto ig = ctx.ideal_generators_E();
  std::vector<BisetElement> gens;
  for (const auto* part : {&ig.i0, &ig.i1, &ig.triv})
    for (int cls : *part) gens.push_back(ctx.basis(ctx.E(), ctx.E(), cls));
  r.num("two-sided ideal generated by I0, I1 and trivial bisets", std::nullopt,
        static_cast<long long>(generated_ideal_dim(ctx, ctx.E(), gens)), static_cast<long long>(ctx.ideal_classes(ctx.E()).size()));

  auto els = gl2_elements(p);
  int bad_pi = 0;
  for (std::size_t k = 0; k < els.size(); ++k) {
    auto w = ctx.pi(ctx.iota(ctx.E(), els[k]));
    std::vector<std::uint8_t> e(els.size(), 0);
    e[k] = 1;
    if (w != e) ++bad_pi;
  }
  r.num("pi(iota(g)) = g: failures over GL_2", std::nullopt, bad_pi, 0);
  std::mt19937_64 rng(r.seed());
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  int bad_hom = 0;
  for (int t = 0; t < 20; ++t) {
    const Mat2& a = els[pick(rng)];
    const Mat2& b = els[pick(rng)];
    if (!(ctx.mul(ctx.iota(ctx.E(), a), ctx.iota(ctx.E(), b)) == ctx.iota(ctx.E(), mat2_mul(a, b, p)))) ++bad_hom;
  }
  r.num("iota(g1) iota(g2) = iota(g1 g2): failures in 20 samples", std::nullopt, bad_hom, 0);
}

void case_transfer(Runner& r) {
  const Cohomology& c = r.coh();
  const Subspaces& sub = r.sub();
  const int p = r.p();
  const Group& e = r.E();
  auto binom = [](int n, int k) {
    long long b = 1;
    for (int t = 0; t < k; ++t) b = b * (n - t) / (t + 1);
    return b;
  };
  for (std::size_t f = 0; f < e.frames().size(); ++f) {
    const std::string& label = e.frames()[f].label;
    const bool inf = label == "Ainf";
    const int i = inf ? 0 : std::stoi(label.substr(1));
    CohClass lin = inf ? c.y1() : c.y1().scaled(i) - c.y2();  // restricts to zero exactly on this frame
    auto tr_u = [&](int k) { return c.transfer(f, c.au().pow(k)); };
    CohClass t1 = tr_u(p - 1);
    const std::string tag = "Tr_" + label;

    r.holds(tag + "(u^(p-1)) = " + std::string(inf ? "y1^(p-1)" : "(i y1 - y2)^(p-1)") + " - C", p - 1,
            t1 == lin.pow(p - 1) - c.C());

    for (int j = 0; j <= p - 2; ++j)
      for (int m = 0; m <= p; ++m) {
        int k = m * (p - 1) + j;
        CohClass lhs = tr_u(k);
        CohClass rhs = m <= j ? c.zero(e, k)
                              : (c.v().pow(j) * c.C().pow(m - j - 1) * t1).scaled(static_cast<int>(binom(m - 1, j) % p));
        std::string name = tag + "(u^" + std::to_string(k) + ") with m=" + std::to_string(m) + " j=" + std::to_string(j);
        r.holds(name + " matches the binomial form", k, lhs == rhs);
        if (k > 0) {
          FpMatrix span = sub.slice(Span{Ring::C, Subspaces::times(c.v().pow(j), sub.M(0))}, k);
          r.holds(name + " lies in Fp[C]{v^j M_0}", k, Subspace(span).contains(lhs.v));
        }
      }
    for (int l = 1; l <= 2 * p; ++l) {
      int sign = (l - 1) % 2 == 0 ? 1 : p - 1;
      r.holds("C^(l-1) " + tag + "(u^(p-1)) = (-1)^(l-1) " + tag + "(u^(p-1))^l, l=" + std::to_string(l), l * (p - 1),
              c.C().pow(l - 1) * t1 == t1.pow(l).scaled(sign));
    }
    for (int n = 1; n <= p; ++n) {
      CohClass base = c.ay().pow(p - 1) - c.au().pow(p - 1);
      CohClass lhs = c.transfer(f, base.pow(n));
      CohClass cn = c.C().pow(n);
      CohClass rhs1 = cn - (c.C() + t1).pow(n);
      CohClass rhs2 = cn - lin.pow(n * (p - 1));
      std::string name = tag + "((y^(p-1) - u^(p-1))^" + std::to_string(n) + ")";
      r.holds(name + " = C^n - (C + Tr(u^(p-1)))^n", n * (p - 1), lhs == rhs1);
      r.holds(name + " = C^n - (linear form)^(n(p-1))", n * (p - 1), lhs == rhs2);
      FpMatrix span = sub.slice(Span{Ring::C, sub.M(0)}, n * (p - 1));
      r.holds(name + " lies in Fp[C]{M_0}", n * (p - 1), Subspace(span).contains(lhs.v));
    }
  }
  // basis property uses all frames at once
  for (int m = 0; m <= p - 2; ++m) {
    std::vector<CohClass> xs;
    for (std::size_t f = 0; f < e.frames().size(); ++f) xs.push_back(c.y_hat(f).pow(m) * c.transfer(f, c.au().pow(p - 1)));
    int n = m + p - 1;
    FpMatrix span = span_of(xs, c.model(e).width(n), p);
    FpMatrix mm = sub.slice(Span{Ring::scalars, sub.M(m)}, n);
    bool ok = rank(span) == static_cast<std::size_t>(p + 1) && subspace_equal(row_basis(span), mm);
    r.add("y_hat^m Tr_A(u^(p-1)) over all A is a basis of M_" + std::to_string(m), n,
          "rank " + std::to_string(rank(span)) + (subspace_equal(row_basis(span), mm) ? ", spans M" : ", other span"),
          "rank " + std::to_string(p + 1) + ", spans M", ok);
  }
}

void case_stable_decomposition(Runner& r) {
  const Cohomology& c = r.coh();
  auto fams = r.sub().stable_families();
  const auto& gens = r.wb().simples().family(r.E());
  for (int n = 1; n <= r.N(); ++n) {
    FpMatrix all(r.p(), 0, c.model(r.E()).width(n));
    std::size_t total = 0;
    int unstable = 0;
    std::string parts;
    for (const auto& [name, spans] : fams) {
      FpMatrix b = r.sub().slice(spans, n);
      total += b.rows();
      parts += (parts.empty() ? "" : "+") + std::to_string(b.rows());
      all.append_rows(b);
      Subspace s(b);
      for (const auto& z : gens)
        if (!s.contains(c.act_rows(z, b, n))) {
          ++unstable;
          break;
        }
    }
    std::size_t dim = c.he_basis(n).dim();
    bool ok = unstable == 0 && total == dim && rank(all) == dim;
    r.add("four stable families: dims, rank of their sum, unstable families", n,
          parts + "=" + std::to_string(total) + ", rank " + std::to_string(rank(all)) + ", unstable " + std::to_string(unstable),
          "sum=" + std::to_string(dim) + ", rank " + std::to_string(dim) + ", unstable 0", ok);
  }
}

void case_cyclic_trivial_twist(Runner& r) {
  const Subspaces& sub = r.sub();
  const CohClass V = r.coh().V();
  for (int n = 1; n <= r.N(); ++n) {
    FpMatrix up = sub.slice(Span{Ring::CA, sub.M(0)}, n);
    FpMatrix low = sub.slice(Span{Ring::CA, Subspaces::times(V, sub.M(0))}, n);
    r.isotypic("CA{M_0}/CA{VM_0}", Q_type(0), r.E(), n, up, low);
    r.free_of("H/CA{M_0}", Q_type(0), r.E(), n, r.whole(r.E(), n), up);
    r.free_of("CA{VM_0}", Q_type(0), r.E(), n, low, r.empty(r.E(), n));
  }
}

void case_cyclic_twisted(Runner& r) {
  const Subspaces& sub = r.sub();
  for (int i = 1; i <= r.p() - 2; ++i) {
    std::string is = std::to_string(i);
    for (int n = 1; n <= r.N(); ++n) {
      FpMatrix up = sub.slice(sub.Z(i), n);
      FpMatrix low = sub.slice(sub.inner_Z(i), n);
      r.isotypic("Z_" + is + "/CA{v^" + is + "M_0+VM_" + is + "}", Q_type(i), r.E(), n, up, low);
      r.free_of("H/Z_" + is, Q_type(i), r.E(), n, r.whole(r.E(), n), up);
      r.free_of("CA{v^" + is + "M_0+VM_" + is + "}", Q_type(i), r.E(), n, low, r.empty(r.E(), n));
    }
  }
}

void case_rank_two_isotypic(Runner& r) {
  const Subspaces& sub = r.sub();
  const Cohomology& c = r.coh();
  for (int m = 0; m <= r.p() - 2; ++m) {
    CohClass lead = m == 0 ? c.D2() : c.v().pow(m);
    std::string name = m == 0 ? "DA{D2 N_0}" : "DA{v^" + std::to_string(m) + " N_" + std::to_string(m) + "}";
    for (int n = 1; n <= r.N(); ++n) {
      FpMatrix x = sub.slice(Span{Ring::DA, Subspaces::times(lead, sub.N(m))}, n);
      r.isotypic(name, A_type(m), r.E(), n, x, r.empty(r.E(), n));
      r.free_of("H/" + name, A_type(m), r.E(), n, r.whole(r.E(), n), x);
    }
  }
}

void case_rank_two_induction(Runner& r) {
  const Cohomology& c = r.coh();
  const Subspaces& sub = r.sub();
  const RankTwo& rt = r.rt();
  const int p = r.p();
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j)
      for (int m = 0; m <= p - 2; ++m)
        for (int n = 0; n <= p - 1; ++n) {
          if (j + m == 0) continue;
          CohClass mult = c.D1_tilde().pow(i) * c.D2_tilde().pow(j);
          std::vector<CohClass> xs;
          for (const auto& w : rt.W_classes(n, m)) xs.push_back(w * mult);
          int wt = xs.front().weight;
          FpMatrix rows = span_of(xs, static_cast<std::size_t>(wt + 1), p);
          FpMatrix img = rt.biset_image(r.E(), r.A(), rows, wt);
          CohClass lead = c.D1().pow(i) * c.D2().pow(j) * c.v().pow(m) * c.C().pow(n);
          FpMatrix rhs = sub.slice(Span{Ring::scalars, Subspaces::times(lead, sub.M(m))}, wt);
          std::ostringstream nm;
          nm << "(i,j,m,n)=(" << i << " " << j << " " << m << " " << n << ")";
          r.add("image of D1~^i D2~^j d2^m W_n under A_p(E,A) equals D1^i D2^j v^m C^n M_m " + nm.str(), wt,
                std::to_string(img.rows()) + (subspace_equal(img, rhs) ? " equal" : " differ"),
                std::to_string(rhs.rows()) + " equal", subspace_equal(img, rhs));
          auto fs = r.factors(r.E(), wt, img, r.empty(r.E(), wt));
          bool simple = fs.size() == 1 && fs[0].multiplicity == 1 && fs[0].id && *fs[0].id == A_type(m);
          r.add("the image is simple " + nm.str(), wt, describe(fs), "1x" + A_type(m).name(), simple);
        }
}

void case_simple_census(Runner& r) {
  const Simples& sim = r.wb().simples();
  const int p = r.p();
  const Group& e = r.E();
  std::mt19937_64 rng(r.seed());
  for (const auto& id : sim.census(e)) {
    const Module& m = sim.reference(id);
    r.num("reference dim " + id.name(), std::nullopt, static_cast<long long>(m.dim), id.expected_dim(p));
    r.holds("reference irreducible " + id.name(), std::nullopt, is_irreducible(m, rng));
  }
  for (int i = 0; i <= p - 2; ++i)
    for (int q = 0; q <= p - 2; ++q)
      r.num("S_{A, S(A)^" + std::to_string(i) + " det^" + std::to_string(q) + "}(E) vanishes", std::nullopt,
            static_cast<long long>(sim.rank_two_value(i, q).dim), 0);
  for (int q = 0; q <= p - 2; ++q)
    r.holds(A_type(q).name() + " is not isomorphic to " + Q_type(0).name(), std::nullopt,
            !iso_test(sim.reference(A_type(q)), sim.reference(Q_type(0))));
  // J(E) does not kill the cyclic-type references
  const std::size_t out_gens = r.ctx().family_out_count();
  for (int i = 0; i <= p - 2; ++i) {
    const Module& m = sim.reference(Q_type(i));
    bool moved = false;
    for (std::size_t k = out_gens; k < m.gens.size(); ++k) moved = moved || !m.gens[k].is_zero();
    r.holds("J(E) acts nontrivially on " + Q_type(i).name(), std::nullopt, moved);
  }

  std::set<SimpleId> seen;
  for (int n = 1; n <= r.N(); ++n) {
    const WeightCensus& wc = r.wb().census().at(e, n, r.seed());
    int unknown = 0, wrong_dim = 0;
    for (const auto& f : wc.factors) {
      if (!f.id) {
        ++unknown;
        continue;
      }
      if (static_cast<int>(f.dim) != f.id->expected_dim(p)) ++wrong_dim;
      seen.insert(*f.id);
    }
    r.add("factors of H^2n(E) are census simples", n, describe(wc.factors), "no unknown factor",
          unknown == 0 && wrong_dim == 0);
  }
  // a simple must show up once its subspace series is nonzero below the cap
  std::string miss, extra;
  std::set<SimpleId> due;
  for (const auto& cf : closed_forms(p, r.N()))
    if (std::any_of(cf.series.begin() + 1, cf.series.end(), [](long long x) { return x != 0; })) due.insert(cf.id);
  for (const auto& id : due)
    if (!seen.count(id)) miss += (miss.empty() ? "" : " ") + id.name();
  for (const auto& id : seen)
    if (!due.count(id)) extra += (extra.empty() ? "" : " ") + id.name();
  r.num("distinct positive-degree simples seen", std::nullopt, static_cast<long long>(seen.size()),
        static_cast<long long>(due.size()));
  r.same("simples due below the cap but never seen", std::nullopt, miss.empty() ? "none" : miss, "none");
  r.same("simples seen without a nonzero series", std::nullopt, extra.empty() ? "none" : extra, "none");
}

void case_summand_series(Runner& r) {
  const int p = r.p();
  const int N = r.N();
  auto forms = closed_forms(p, N);
  std::vector<long long> total(static_cast<std::size_t>(N + 1), 0);
  for (const auto& cf : forms) {
    auto h = r.wb().census().summand_hilbert(cf.id, N, r.seed());
    for (int n = 1; n <= N; ++n) {
      auto un = static_cast<std::size_t>(n);
      total[un] += h[un];
      r.num(cf.label + " = " + cf.text(), n, h[un], cf.series[un]);
    }
  }
  for (int n = 1; n <= N; ++n)
    r.num("sum over all summands = dim H^2n(E)", n, total[static_cast<std::size_t>(n)],
          static_cast<long long>(r.coh().he_basis(n).dim()));
  for (int i = 1; i <= p - 2; ++i)
    for (int q = 0; q <= p - 2; ++q) {
      int row = twisted_row(i, q, p);
      r.add("table row for (i,q)=(" + std::to_string(i) + " " + std::to_string(q) + ")", std::nullopt,
            std::to_string(row + 1), "1..6", row >= 0 && row < 6);
    }
}

void case_rank_two_census(Runner& r) {
  const Simples& sim = r.wb().simples();
  const int p = r.p();
  const Group& a = r.A();
  std::mt19937_64 rng(r.seed());
  for (const auto& id : sim.census(a)) {
    const Module& m = sim.reference(id);
    r.num("reference dim " + id.name(), std::nullopt, static_cast<long long>(m.dim), id.expected_dim(p));
    r.holds("reference irreducible " + id.name(), std::nullopt, is_irreducible(m, rng));
  }
  std::set<SimpleId> seen;
  for (int n = 1; n <= r.NA(); ++n) {
    const WeightCensus& wc = r.wb().census().at(a, n, r.seed());
    int unknown = 0;
    for (const auto& f : wc.factors) {
      if (f.id)
        seen.insert(*f.id);
      else
        ++unknown;
    }
    r.add("factors of H^2n(A) are census simples", n, describe(wc.factors), "no unknown factor", unknown == 0);
  }
  // d2^q S^i has weight i + (p+1)q, so every type is present by p^2-3
  if (r.NA() >= p * p - 3) {
    std::string miss;
    for (const auto& id : sim.census(a))
      if (id.kind != MinimalSubgroup::trivial && !seen.count(id)) miss += (miss.empty() ? "" : " ") + id.name();
    r.same("positive-degree simples never seen", std::nullopt, miss.empty() ? "none" : miss, "none");
  }
}

void case_rank_two_chain(Runner& r) {
  const int p = r.p();
  const Group& a = r.A();
  const RankTwo& rt = r.rt();
  const Census& cen = r.wb().census();
  const std::size_t out_gens = r.ctx().family_out_count();
  for (int n = 1; n <= r.NA(); ++n) {
    FpMatrix d2 = rt.d2_slice(1, n);
    FpMatrix L = rt.L_slice(n);
    FpMatrix qimg = rt.cyclic_image(n);
    Module whole = cen.cohomology_module(a, n);
    r.holds("L(Q) contains d2 H(A)", n, subspace_contains(L, d2));
    r.holds("L(Q) and d2 H(A) are submodules", n, is_invariant(whole, L) && is_invariant(whole, d2));
    bool in_q = true, kills_d2 = true;
    Subspace qs(qimg);
    for (std::size_t k = out_gens; k < whole.gens.size(); ++k) {
      if (!qs.contains(whole.gens[k])) in_q = false;  // images of the basis rows
      if (!(d2.empty() || (d2 * whole.gens[k]).is_zero())) kills_d2 = false;
    }
    r.holds("H(A) J(A) lies in H(Q) A_p(A,Q)", n, in_q);
    r.holds("d2 H(A) J(A) = 0", n, kills_d2);

    auto top = r.factors(a, n, r.whole(a, n), L);
    int bad_top = 0;
    for (const auto& f : top)
      if (!f.id || f.id->kind != MinimalSubgroup::whole || f.id->i == p - 1) bad_top += f.multiplicity;
    r.add("H(A)/L(Q): minimal subgroup A, no S^(p-1) type", n, describe(top), "only S(A,A,S^i*det^q), i < p-1",
          bad_top == 0);

    SimpleId uq{false, MinimalSubgroup::cyclic, n % (p - 1), 0};
    auto mid = r.factors(a, n, L, d2);
    bool one = mid.size() == 1 && mid[0].multiplicity == 1 && mid[0].id && *mid[0].id == uq;
    r.add("L(Q)/d2 H(A) is simple", n, describe(mid), "1x" + uq.name(), one);

    auto bottom = r.factors(a, n, d2, r.empty(a, n));
    int bad_bottom = 0;
    for (const auto& f : bottom)
      if (!f.id || f.id->kind != MinimalSubgroup::whole) bad_bottom += f.multiplicity;
    r.add("d2 H(A): minimal subgroup A", n, describe(bottom), "only S(A,A,...)", bad_bottom == 0);
  }
}

void case_rank_two_steinberg(Runner& r) {
  const int p = r.p();
  const Cohomology& c = r.coh();
  const Subspaces& sub = r.sub();
  const RankTwo& rt = r.rt();
  const Group& a = r.A();
  const Census& cen = r.wb().census();
  CohClass D1t = c.D1_tilde();
  auto mono = [&](int e1, int e2) { return c.ay().pow(e1) * c.au().pow(e2); };

  for (int j = 0; j <= p - 1; ++j) {
    int w = (j + 1) * (p - 1);
    int w2 = w + p * (p - 1);
    Subspace d2(rt.d2_slice(1, w2));
    int bad = 0;
    for (int l = 0; l <= p - 2; ++l)
      if (!d2.contains((D1t * mono(w - l, l) - mono(w2 - l, l)).v)) ++bad;
    if (!d2.contains((D1t * mono(0, w) - mono(0, w2)).v)) ++bad;
    r.num("D1~ y^(w-l) u^l = y^(w'-l) u^l and D1~ u^w = u^w' mod d2, j=" + std::to_string(j) + ": failures", w2, bad, 0);
  }

  for (int j = 0; j <= p - 1; ++j) {
    const FpMatrix& W = rt.W(j);
    int w = rt.W_weight(j);
    FpMatrix d2 = rt.d2_slice(1, w);
    bool inv = true;
    for (const Mat2& g : gl2_generators(p)) inv = inv && subspace_contains(W, W * rt.gl2_action(a, g, w));
    r.holds("W_" + std::to_string(j) + " is a GL_2-submodule of dim p meeting d2 H(A) in 0", w,
            inv && W.rows() == static_cast<std::size_t>(p) && subspace_intersect(W, d2).empty());
    for (int m = 0;; ++m) {
      int wt = (j + m * p + 1) * (p - 1);
      if (wt > r.NA()) break;
      FpMatrix target = sub.slice(Span{Ring::scalars, Subspaces::times(c.C().pow(j + m * p), sub.S(p - 1))}, wt);
      FpMatrix pre = rt.preimage(target, wt);
      std::vector<CohClass> dw;
      for (const auto& x : rt.W_classes(j, 0)) dw.push_back(x * D1t.pow(m));
      FpMatrix dwm = span_of(dw, static_cast<std::size_t>(wt + 1), p);
      FpMatrix d2w = rt.d2_slice(1, wt);
      bool ok = subspace_equal(subspace_sum(dwm, d2w), pre) && subspace_intersect(row_basis(dwm), d2w).empty();
      r.holds("preimage of C^(j+mp) S^(p-1) = D1~^m W_j + d2 H(A), direct, (j,m)=(" + std::to_string(j) + " " +
                  std::to_string(m) + ")",
              wt, ok);
    }
  }

  // GL_2-level: the Dickson span of d2^m W_n is the whole S^(p-1) det^m part
  for (int m = 0; m <= p - 2; ++m) {
    Module ref = first_gens(r.wb().simples().reference(SimpleId{false, MinimalSubgroup::whole, p - 1, m}), 2);
    for (int n = 1; n <= r.NA(); ++n) {
      FpMatrix x = rt.dickson_W(m, n);
      Module g2 = first_gens(cen.cohomology_module(a, n), 2);
      if (!is_invariant(g2, x)) {
        r.holds("DA~{d2^" + std::to_string(m) + " W} is a GL_2-submodule", n, false);
        continue;
      }
      auto count = [&](const Module& mod, int& other) {
        int hits = 0;
        other = 0;
        if (mod.dim == 0) return 0;
        for (const auto& f : chop(mod, r.seed() + static_cast<std::uint64_t>(n))) {
          if (f.module.dim == ref.dim && iso_test(f.module, ref))
            hits += f.multiplicity;
          else
            other += f.multiplicity;
        }
        return hits;
      };
      int o_in = 0, o_out = 0;
      int in = count(submodule(g2, x), o_in);
      int out = count(quotient(g2, x), o_out);
      std::string sm = "S^" + std::to_string(p - 1) + "*det^" + std::to_string(m);
      r.add("DA~{d2^" + std::to_string(m) + " W} is " + sm + "-isotypic over GL_2", n,
            std::to_string(in) + " copies, " + std::to_string(o_in) + " other", "only copies", o_in == 0);
      r.num("H(A)/DA~{d2^" + std::to_string(m) + " W} has no " + sm + " over GL_2", n, out, 0);
      (void)o_out;
    }
  }

  // A_p(A,A)-level
  const long long dw = static_cast<long long>(p) * (p - 1);
  const long long d2w = static_cast<long long>(p) * p - 1;
  for (int m = 0; m <= p - 2; ++m)
    for (int n = 0; n <= p - 1; ++n)
      for (int i = 0; i * dw <= r.NA(); ++i)
        for (int j = 0; i * dw + j * d2w <= r.NA(); ++j) {
          if (j + m == 0) continue;
          std::vector<CohClass> xs;
          for (const auto& x : rt.W_classes(n, m)) xs.push_back(x * D1t.pow(i) * c.D2_tilde().pow(j));
          int wt = xs.front().weight;
          if (wt > r.NA()) continue;
          FpMatrix rows = span_of(xs, static_cast<std::size_t>(wt + 1), p);
          SimpleId want{false, MinimalSubgroup::whole, p - 1, m};
          std::ostringstream nm;
          nm << "D1~^" << i << " D2~^" << j << " d2^" << m << " W_" << n;
          Module whole = cen.cohomology_module(a, wt);
          if (!is_invariant(whole, rows)) {
            r.holds(nm.str() + " is a submodule", wt, false);
            continue;
          }
          auto fs = r.factors(a, wt, rows, r.empty(a, wt));
          bool ok = fs.size() == 1 && fs[0].multiplicity == 1 && fs[0].id && *fs[0].id == want;
          r.add(nm.str() + " is a simple submodule", wt, describe(fs), "1x" + want.name(), ok);
        }
  for (int m = 0; m <= p - 2; ++m) {
    SimpleId want{false, MinimalSubgroup::whole, p - 1, m};
    std::string name = m == 0 ? "H(A)/DA~{D2~ W}" : "H(A)/DA~{d2^" + std::to_string(m) + " W}";
    for (int n = 1; n <= r.NA(); ++n) {
      FpMatrix x = rt.dickson_W(m == 0 ? -1 : m, n);
      r.free_of(name, want, a, n, r.whole(a, n), x);
      if (!x.empty()) {
        Module whole = cen.cohomology_module(a, n);
        bool zero = true;
        for (std::size_t k = r.ctx().family_out_count(); k < whole.gens.size(); ++k)
          if (!(x * whole.gens[k]).is_zero()) zero = false;
        r.holds(std::string(m == 0 ? "DA~{D2~ W}" : "DA~{d2^" + std::to_string(m) + " W}") + " is killed by J(A)", n, zero);
      }
    }
  }
}

void case_structural(Runner& r) {
  const BisetContext& ctx = r.ctx();
  const Cohomology& c = r.coh();
  const int p = r.p();
  const Group& e = r.E();
  std::mt19937_64 rng(r.seed());
  const BisetSpace& ee = ctx.space(e, e);
  std::uniform_int_distribution<int> coef(1, p - 1);
  auto random_element = [&](const BisetSpace& s) {
    std::uniform_int_distribution<std::size_t> pick(0, s.dim() - 1);
    BisetElement z = ctx.zero(s.source(), s.target());
    for (int t = 0; t < 3; ++t) z = z + ctx.basis(s.source(), s.target(), static_cast<int>(pick(rng))).scaled(coef(rng));
    return z;
  };
  auto random_class = [&](const Group& g, int n) {
    const GradedPiece& gp = c.piece(g, n);
    std::vector<std::uint8_t> v(gp.basis.cols(), 0);
    std::uniform_int_distribution<int> any(0, p - 1);
    for (std::size_t k = 0; k < gp.dim(); ++k) axpy(v, any(rng), gp.basis.row_vector(k), p);
    return c.from_vector(g, n, v);
  };

  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    auto a = random_element(ee), b = random_element(ee), d = random_element(ee);
    if (!(ctx.mul(ctx.mul(a, b), d) == ctx.mul(a, ctx.mul(b, d)))) ++bad;
  }
  r.num("associativity on 100 random triples in A_p(E,E)", std::nullopt, bad, 0);

  bad = 0;
  const BisetSpace& ea = ctx.space(e, r.A());
  const BisetSpace& aa = ctx.space(r.A(), r.A());
  for (int t = 0; t < 50; ++t) {
    int n = 1 + static_cast<int>(rng() % 8);
    CohClass x = random_class(e, n);
    auto z1 = random_element(ee), z2 = random_element(ee);
    if (!(c.act(z1, c.act(z2, x)) == c.act(ctx.mul(z2, z1), x))) ++bad;
    // mixed groups: A -> A -> E
    CohClass y = random_class(r.A(), n);
    auto w2 = random_element(aa), w1 = random_element(ea);
    if (!(c.act(w1, c.act(w2, y)) == c.act(ctx.mul(w2, w1), y))) ++bad;
  }
  r.num("module axiom (x.z2).z1 = x.(z2 z1) on 50 random triples, weights 1..8", std::nullopt, bad, 0);

  bad = 0;
  for (int t = 0; t < 50; ++t) {
    std::size_t f = rng() % e.frames().size();
    int n = 1 + static_cast<int>(rng() % 6), m = 1 + static_cast<int>(rng() % 6);
    CohClass x = random_class(e, n);
    CohClass g = random_class(r.A(), m);
    if (!(c.transfer(f, c.restrict_to_frame(x, f) * g) == x * c.transfer(f, g))) ++bad;
  }
  r.num("Frobenius reciprocity Tr(res(x) f) = x Tr(f) on 50 random pairs", std::nullopt, bad, 0);

  const Census& cen = r.wb().census();
  for (const Group* g : {&e, &r.A()})
    for (int n = 1; n <= r.NA(); ++n) {
      const auto& a = cen.at(*g, n, r.seed());
      const auto& b = cen.at(*g, n, r.seed() + 1000003ULL);
      r.add("chop of H^2n(" + g->name() + ") agrees across two seeds", n, describe(b.factors), describe(a.factors),
            same_factors(a.factors, b.factors));
    }
}

const std::map<std::string, std::function<void(Runner&)>>& dispatch() {
  static const std::map<std::string, std::function<void(Runner&)>> table{
      {"cohomology-dimensions", case_dimensions},
      {"ring-relations", case_ring_relations},
      {"ideal-generation", case_ideal_generation},
      {"transfer-closed-forms", case_transfer},
      {"stable-decomposition", case_stable_decomposition},
      {"cyclic-trivial-twist-isotypic", case_cyclic_trivial_twist},
      {"cyclic-twisted-isotypic", case_cyclic_twisted},
      {"rank-two-isotypic", case_rank_two_isotypic},
      {"rank-two-induction", case_rank_two_induction},
      {"simple-census", case_simple_census},
      {"summand-series", case_summand_series},
      {"rank-two-census", case_rank_two_census},
      {"rank-two-chain", case_rank_two_chain},
      {"rank-two-steinberg", case_rank_two_steinberg},
      {"structural", case_structural},
  };
  return table;
}

}  // namespace

CaseResult run_case(Workbench& wb, const std::string& id) {
  auto it = dispatch().find(id);
  if (it == dispatch().end()) throw std::invalid_argument("unknown case " + id);
  CaseResult res;
  res.id = id;
  for (const auto& ci : verification_cases())
    if (ci.id == id) res.statement = ci.statement;
  auto t0 = std::chrono::steady_clock::now();
  Runner runner(wb, res);
  try {
    it->second(runner);
  } catch (const std::exception& ex) {
    res.error = ex.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace burnside

#include "burnside/meataxe.hpp"

#include <deque>
#include <stdexcept>

namespace burnside {

Module make_module(int p, std::size_t dim, std::vector<FpMatrix> gens) {
  for (const auto& g : gens)
    if (g.rows() != dim || g.cols() != dim || g.p() != p) throw std::invalid_argument("generator does not match module size");
  return Module{p, dim, std::move(gens)};
}

namespace {

// distinct nonzero generators; zero ones never move anything
std::vector<const FpMatrix*> active_gens(const Module& m) {
  std::vector<const FpMatrix*> out;
  for (const auto& g : m.gens) {
    if (g.is_zero()) continue;
    bool dup = false;
    for (const auto* h : out)
      if (*h == g) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(&g);
  }
  return out;
}

}  // namespace

bool is_invariant(const Module& m, const FpMatrix& rows) {
  Subspace s(rows);
  for (const auto* g : active_gens(m))
    if (!s.contains(s.basis() * *g)) return false;
  return true;
}

FpMatrix spin(const Module& m, const FpMatrix& seeds) {
  Subspace s(m.p, m.dim);
  std::deque<std::vector<std::uint8_t>> queue;
  for (std::size_t r = 0; r < seeds.rows(); ++r) {
    auto v = seeds.row_vector(r);
    if (s.insert(v)) queue.push_back(std::move(v));
  }
  auto gens = active_gens(m);
  while (!queue.empty() && s.dim() < m.dim) {
    auto v = std::move(queue.front());
    queue.pop_front();
    for (const auto* g : gens) {
      auto w = row_times(v, *g);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s.basis();
}

Module submodule(const Module& m, const FpMatrix& basis) {
  Subspace s(basis);
  Module out{m.p, s.dim(), {}};
  for (const auto& g : m.gens) {
    FpMatrix a(m.p, 0, s.dim());
    FpMatrix img = s.basis() * g;
    for (std::size_t r = 0; r < img.rows(); ++r) {
      auto c = s.coordinates(img.row_vector(r));
      if (!c) throw std::logic_error("subspace is not invariant");
      a.append_row(*c);
    }
    out.gens.push_back(std::move(a));
  }
  return out;
}

Module quotient(const Module& m, const FpMatrix& basis) {
  Subspace s(basis);
  if (s.ambient() != m.dim) throw std::invalid_argument("subspace has the wrong ambient dimension");
  std::vector<char> piv(m.dim, 0);
  for (auto c : s.pivots()) piv[c] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.dim; ++c)
    if (!piv[c]) free.push_back(c);
  Module out{m.p, free.size(), {}};
  for (const auto& g : m.gens) {
    FpMatrix a(m.p, free.size(), free.size());
    for (std::size_t r = 0; r < free.size(); ++r) {
      auto w = g.row_vector(free[r]);
      s.reduce(w);
      for (std::size_t k = 0; k < free.size(); ++k) a.row(r)[k] = w[free[k]];
    }
    out.gens.push_back(std::move(a));
  }
  return out;
}

Module subquotient(const Module& m, const FpMatrix& upper, const FpMatrix& lower) {
  Subspace up(upper);
  Module sub = submodule(m, up.basis());
  FpMatrix low(m.p, 0, up.dim());
  for (std::size_t r = 0; r < lower.rows(); ++r) {
    auto c = up.coordinates(lower.row_vector(r));
    if (!c) throw std::invalid_argument("lower subspace is not inside the upper one");
    low.append_row(*c);
  }
  return quotient(sub, low);
}

Module dual(const Module& m) {
  Module out{m.p, m.dim, {}};
  for (const auto& g : m.gens) out.gens.push_back(g.transpose());
  return out;
}

std::optional<FpMatrix> proper_submodule(const Module& m, std::mt19937_64& rng) {
  if (m.dim <= 1) return std::nullopt;
  auto gens = active_gens(m);
  if (gens.empty()) {
    FpMatrix v(m.p, 1, m.dim);
    v.set(0, 0, 1);
    return v;
  }
  const int p = m.p;
  std::uniform_int_distribution<int> coef(1, p - 1);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, 4);
  Module dm = dual(m);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    FpMatrix theta(p, m.dim, m.dim);
    for (int t = 0; t < 3; ++t) {
      FpMatrix w = *gens[pick(rng)];
      for (int l = len(rng); l > 1; --l) w = w * *gens[pick(rng)];
      theta = theta + w.scaled(coef(rng));
    }
    for (int lam = 0; lam < p; ++lam) {
      FpMatrix shifted = theta - FpMatrix::identity(p, m.dim).scaled(lam);
      FpMatrix k = nullspace(shifted.transpose());  // v * shifted = 0
      if (k.empty()) continue;
      std::vector<std::uint8_t> v(m.dim, 0);
      for (std::size_t r = 0; r < k.rows(); ++r) axpy(v, coef(rng), k.row_vector(r), p);
      if (is_zero_vector(v)) v = k.row_vector(0);
      FpMatrix seed(p, 0, m.dim);
      seed.append_row(v);
      FpMatrix s = spin(m, seed);
      if (s.rows() < m.dim) return s;
      if (k.rows() != 1) continue;
      FpMatrix kt = nullspace(shifted);  // w * shifted^T = 0
      FpMatrix ds = spin(dm, kt.row_range(0, 1));
      if (ds.rows() < m.dim) return nullspace(ds);
      return std::nullopt;
    }
  }
  throw std::runtime_error("irreducibility test did not settle");
}

bool is_irreducible(const Module& m, std::mt19937_64& rng) { return m.dim > 0 && !proper_submodule(m, rng); }

std::vector<Factor> chop(const Module& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Factor> out;
  std::vector<Module> work{m};
  while (!work.empty()) {
    Module cur = std::move(work.back());
    work.pop_back();
    if (cur.dim == 0) continue;
    auto sub = proper_submodule(cur, rng);
    if (sub) {
      work.push_back(quotient(cur, *sub));
      work.push_back(submodule(cur, *sub));
      continue;
    }
    bool merged = false;
    for (auto& f : out)
      if (f.module.dim == cur.dim && iso_test(f.module, cur)) {
        ++f.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.push_back(Factor{std::move(cur), 1});
  }
  return out;
}

std::size_t hom_dim(const Module& a, const Module& b) {
  if (a.gens.size() != b.gens.size()) throw std::invalid_argument("modules use different generator lists");
  const std::size_t da = a.dim, db = b.dim, nv = da * db;
  const int p = a.p;
  Subspace eq(p, nv);
  // unknown X is da x db, X[r][c] at r*db+c; equation (ga X - X gb)[i][j] = 0
  for (std::size_t g = 0; g < a.gens.size() && eq.dim() < nv; ++g) {
    const FpMatrix& ga = a.gens[g];
    const FpMatrix& gb = b.gens[g];
    if (ga.is_zero() && gb.is_zero()) continue;
    for (std::size_t i = 0; i < da && eq.dim() < nv; ++i)
      for (std::size_t j = 0; j < db; ++j) {
        std::vector<std::uint8_t> row(nv, 0);
        for (std::size_t k = 0; k < da; ++k) row[k * db + j] = static_cast<std::uint8_t>((row[k * db + j] + ga.at(i, k)) % p);
        for (std::size_t k = 0; k < db; ++k)
          row[i * db + k] = static_cast<std::uint8_t>((row[i * db + k] + p - gb.at(k, j)) % p);
        eq.insert(std::move(row));
      }
  }
  return nv - eq.dim();
}

bool iso_test(const Module& a, const Module& b) {
  if (a.dim != b.dim || a.p != b.p) return false;
  std::mt19937_64 rng(a.dim * 7919 + a.gens.size());
  if (!is_irreducible(a, rng) || !is_irreducible(b, rng)) throw std::invalid_argument("iso_test needs irreducible modules");
  return hom_dim(a, b) > 0;
}

}  // namespace burnside

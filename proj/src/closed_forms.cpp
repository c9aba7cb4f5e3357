#include "burnside/closed_forms.hpp"

#include <sstream>
#include <stdexcept>

namespace burnside {

std::vector<int> ring_weights(CoefRing r, int p) {
  switch (r) {
    case CoefRing::C:
      return {p - 1};
    case CoefRing::CA:
      return {p - 1, p * (p - 1)};
    case CoefRing::DA:
      return {p * (p - 1), p * p - 1};
  }
  return {};
}

std::string ring_name(CoefRing r) {
  switch (r) {
    case CoefRing::C:
      return "Fp[C]";
    case CoefRing::CA:
      return "CA";
    case CoefRing::DA:
      return "DA";
  }
  return "?";
}

namespace {

std::vector<long long> divide_out(std::vector<long long> c, const std::vector<int>& weights) {
  for (int w : weights)
    for (std::size_t n = static_cast<std::size_t>(w); n < c.size(); ++n) c[n] += c[n - static_cast<std::size_t>(w)];
  return c;
}

}  // namespace

std::string FreeSpan::text() const {
  std::ostringstream os;
  os << ring_name(ring) << (positive_only ? "+" : "") << "{";
  for (std::size_t k = 0; k < gens.size(); ++k) os << (k ? " + " : "") << gens[k].name;
  os << "}";
  return os.str();
}

std::vector<long long> FreeSpan::series(int p, int n_max) const {
  std::vector<long long> c(static_cast<std::size_t>(n_max + 1), 0);
  for (const auto& g : gens)
    if (g.weight <= n_max) c[static_cast<std::size_t>(g.weight)] += g.dim;
  c = divide_out(std::move(c), ring_weights(ring, p));
  if (positive_only) c[0] = 0;
  return c;
}

const std::vector<TwistedRow>& twisted_table() {
  using S = TwistedRow::Shape;
  static const std::vector<TwistedRow> rows{
      {S::q_zero, true, CoefRing::CA, true, CoefRing::DA, true},
      {S::q_zero, false, CoefRing::CA, true, CoefRing::CA, false},
      {S::i_equals_q, true, CoefRing::DA, false, CoefRing::DA, true},
      {S::i_equals_q, false, CoefRing::DA, false, CoefRing::CA, false},
      {S::generic, true, CoefRing::CA, false, CoefRing::DA, true},
      {S::generic, false, CoefRing::CA, false, CoefRing::CA, false},
  };
  return rows;
}

int twisted_row(int i, int q, int p) {
  if (i < 1 || i > p - 2 || q < 0 || q > p - 2) throw std::invalid_argument("twisted table needs 1 <= i <= p-2, 0 <= q <= p-2");
  using S = TwistedRow::Shape;
  S shape = q == 0 ? S::q_zero : (i == q ? S::i_equals_q : S::generic);
  bool div = (q + 2 * i) % (p - 1) == 0;
  const auto& rows = twisted_table();
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (rows[k].shape == shape && rows[k].q_plus_2i_divisible == div) return static_cast<int>(k);
  throw std::logic_error("twisted table has no matching row");
}

std::string ClosedForm::text() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? " (+) " : "") << parts[k].text();
  return os.str();
}

namespace {

std::string pw(const std::string& base, int e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

std::string join_names(std::initializer_list<std::string> xs) {
  std::string out;
  for (const auto& x : xs) {
    if (x.empty()) continue;
    if (!out.empty()) out += "*";
    out += x;
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::vector<ClosedForm> closed_forms(int p, int n_max) {
  const int vw = p * (p - 1);  // weight of V
  const int d2w = p * p - 1;   // weight of D2
  std::vector<ClosedForm> out;
  auto finish = [&](ClosedForm cf) {
    cf.series.assign(static_cast<std::size_t>(n_max + 1), 0);
    for (const auto& part : cf.parts) {
      auto s = part.series(p, n_max);
      for (std::size_t n = 0; n < s.size(); ++n) cf.series[n] += s[n];
    }
    out.push_back(std::move(cf));
  };
  auto lbl = [](const std::string& a, int b) { return "X(" + a + "," + std::to_string(b) + ")"; };

  // simples with minimal subgroup E
  for (int i = 0; i <= p - 1; ++i)
    for (int q = 0; q <= p - 2; ++q) {
      ClosedForm cf{E_type(i, q), lbl(std::to_string(i), q), {}, -1, {}};
      if (i == 0 && q == 0) {
        cf.parts.push_back(FreeSpan{CoefRing::DA, {{0, 1, "1"}}, true});
      } else if (i == 0) {
        cf.parts.push_back(FreeSpan{CoefRing::CA, {{p * q, 1, pw("v", q)}}, false});
      } else if (i == p - 1 && q == 0) {
        cf.parts.push_back(FreeSpan{CoefRing::DA, {{vw + p - 1, p, "V*S^" + std::to_string(p - 1)}}, false});
      } else if (i == p - 1) {
        cf.parts.push_back(
            FreeSpan{CoefRing::CA, {{p * q + p - 1, p, join_names({pw("v", q), "S^" + std::to_string(p - 1)})}}, false});
      } else {
        int row = twisted_row(i, q, p);
        const TwistedRow& r = twisted_table()[static_cast<std::size_t>(row)];
        int s = (i + q) % (p - 1);
        int tk = p - i - 1;  // T^{p-i-1}: weight p-1+tk, dim p-tk
        GenBlock sg{i + p * q + (r.s_times_V ? vw : 0), i + 1,
                    join_names({r.s_times_V ? "V" : "", "S^" + std::to_string(i), pw("v", q)})};
        GenBlock tg{p - 1 + tk + p * s + (r.t_times_V ? vw : 0), p - tk,
                    join_names({r.t_times_V ? "V" : "", "T^" + std::to_string(tk), pw("v", s)})};
        cf.parts.push_back(FreeSpan{r.s_ring, {sg}, false});
        cf.parts.push_back(FreeSpan{r.t_ring, {tg}, false});
        cf.table_row = row;
      }
      finish(std::move(cf));
    }

  // minimal subgroup A: DA{D2 N_0} and DA{v^q N_q}, N_q = sum_j C^j (C S^q + T^q)
  for (int q = 0; q <= p - 2; ++q) {
    ClosedForm cf{A_type(q), lbl("E,A", q), {}, -1, {}};
    FreeSpan fs{CoefRing::DA, {}, false};
    for (int j = 0; j <= p - 1; ++j) {
      int w = j * (p - 1) + (p - 1 + q) + (q == 0 ? d2w : p * q);
      std::string m = "M_" + std::to_string(q);
      fs.gens.push_back(GenBlock{w, p + 1, join_names({q == 0 ? "D2" : pw("v", q), pw("C", j), m})});
    }
    cf.parts.push_back(std::move(fs));
    finish(std::move(cf));
  }

  // minimal subgroup Q: Fp[C]{Fp C + S^{p-1}} and Fp[C]{S^i}
  for (int i = 0; i <= p - 2; ++i) {
    ClosedForm cf{Q_type(i), lbl("E,Q", i), {}, -1, {}};
    if (i == 0)
      cf.parts.push_back(FreeSpan{CoefRing::C, {{p - 1, p + 1, "C + S^" + std::to_string(p - 1)}}, false});
    else
      cf.parts.push_back(FreeSpan{CoefRing::C, {{i, i + 1, "S^" + std::to_string(i)}}, false});
    finish(std::move(cf));
  }
  return out;
}

std::vector<long long> hilbert_series_E(int p, int n_max) {
  std::vector<long long> c(static_cast<std::size_t>(n_max + 1), 0);
  for (int i = 0; i <= p - 1; ++i)
    for (int j = 0; j <= p - 1; ++j)
      if (!(i == p - 1 && j == p - 1) && i + j <= n_max) ++c[static_cast<std::size_t>(i + j)];
  return divide_out(std::move(c), {p - 1, p});
}

}  // namespace burnside

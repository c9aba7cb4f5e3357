#ifndef BURNSIDE_CLOSED_FORMS_HPP
#define BURNSIDE_CLOSED_FORMS_HPP

#include <string>
#include <vector>

#include "burnside/simples.hpp"

namespace burnside {

// Polynomial rings acting freely on the spans below.
enum class CoefRing {
  C,   // F_p[C]
  CA,  // F_p[C, V]
  DA,  // F_p[D1, D2]
};

std::vector<int> ring_weights(CoefRing r, int p);
std::string ring_name(CoefRing r);

struct GenBlock {
  int weight = 0;
  int dim = 0;
  std::string name;
};

// R{gens}, free over R, optionally without its weight-0 part
struct FreeSpan {
  CoefRing ring = CoefRing::CA;
  std::vector<GenBlock> gens;
  bool positive_only = false;

  std::string text() const;
  std::vector<long long> series(int p, int n_max) const;
};

// Rows of the table for S(E,E,S^i det^q), 1 <= i <= p-2: the first row whose
// condition holds selects the rings for S = S^i v^q and T = T^{p-i-1} v^s.
struct TwistedRow {
  enum class Shape { q_zero, i_equals_q, generic };
  Shape shape;
  bool q_plus_2i_divisible;  // q + 2i == 0 mod p-1
  CoefRing s_ring;
  bool s_times_V;
  CoefRing t_ring;
  bool t_times_V;
};
const std::vector<TwistedRow>& twisted_table();
int twisted_row(int i, int q, int p);  // index into twisted_table()

struct ClosedForm {
  SimpleId id;
  std::string label;  // X(i,q), X(E,A,q), X(E,Q,i)
  std::vector<FreeSpan> parts;
  int table_row = -1;
  std::vector<long long> series;
  std::string text() const;
};

// one entry per positive-degree simple A_p(E,E)-module
std::vector<ClosedForm> closed_forms(int p, int n_max);

// dim H^{2n}(E) from the rational generating function
std::vector<long long> hilbert_series_E(int p, int n_max);

}  // namespace burnside

#endif

#include "burnside/fp.hpp"

#include <algorithm>
#include <sstream>

namespace burnside {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_odd_prime(int p) {
  if (!is_odd_prime(p) || p >= 128)
    throw std::invalid_argument("modulus must be an odd prime below 128, got " + std::to_string(p));
}

int fp_reduce(long long x, int p) {
  long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int fp_pow(long long a, long long e, int p) {
  long long base = fp_reduce(a, p), r = 1;
  if (e < 0) {
    base = fp_inv(static_cast<int>(base), p);
    e = -e;
  }
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

int fp_inv(int a, int p) {
  a = fp_reduce(a, p);
  if (a == 0) throw std::domain_error("inverse of zero");
  // extended Euclid
  int t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    int q = r / nr;
    int tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return fp_reduce(t, p);
}

FpScalar::FpScalar(long long value, int p) : value_(0), p_(p) {
  require_odd_prime(p);
  value_ = fp_reduce(value, p);
}

void FpScalar::check(const FpScalar& o) const {
  if (o.p_ != p_) throw std::invalid_argument("modulus mismatch");
}

FpScalar FpScalar::operator+(const FpScalar& o) const {
  check(o);
  return FpScalar(value_ + o.value_, p_);
}
FpScalar FpScalar::operator-(const FpScalar& o) const {
  check(o);
  return FpScalar(value_ - o.value_, p_);
}
FpScalar FpScalar::operator*(const FpScalar& o) const {
  check(o);
  return FpScalar(static_cast<long long>(value_) * o.value_, p_);
}
FpScalar FpScalar::operator/(const FpScalar& o) const {
  check(o);
  return *this * o.inverse();
}
FpScalar FpScalar::operator-() const { return FpScalar(-value_, p_); }
FpScalar FpScalar::inverse() const { return FpScalar(fp_inv(value_, p_), p_); }
FpScalar FpScalar::pow(long long e) const { return FpScalar(fp_pow(value_, e, p_), p_); }

FpMatrix::FpMatrix(int p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_odd_prime(p);
}

FpMatrix FpMatrix::identity(int p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(int p, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::from_rows(int p, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<long long>> v;
  for (auto& r : rows) v.emplace_back(r);
  return from_rows(p, v);
}

FpMatrix FpMatrix::stack(int p, std::size_t cols, const std::vector<std::vector<std::uint8_t>>& rows) {
  FpMatrix m(p, 0, cols);
  m.data_.reserve(rows.size() * cols);
  for (auto& r : rows) m.append_row(r);
  return m;
}

std::vector<std::uint8_t> FpMatrix::row_vector(std::size_t r) const {
  return std::vector<std::uint8_t>(row(r), row(r) + cols_);
}

void FpMatrix::append_row(const std::vector<std::uint8_t>& v) {
  if (v.size() != cols_) throw std::invalid_argument("ambient-dimension mismatch in append_row");
  append_row(v.data());
}

void FpMatrix::append_row(const std::uint8_t* v) {
  data_.insert(data_.end(), v, v + cols_);
  ++rows_;
}

void FpMatrix::append_rows(const FpMatrix& m) {
  if (m.cols_ != cols_) throw std::invalid_argument("ambient-dimension mismatch in append_rows");
  data_.insert(data_.end(), m.data_.begin(), m.data_.end());
  rows_ += m.rows_;
}

FpMatrix FpMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  FpMatrix m(p_, 0, cols_);
  for (auto i : idx) m.append_row(row(i));
  return m;
}

FpMatrix FpMatrix::row_range(std::size_t begin, std::size_t end) const {
  FpMatrix m(p_, 0, cols_);
  for (auto i = begin; i < end; ++i) m.append_row(row(i));
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
  FpMatrix out(p_, rows_, o.cols_);
  std::vector<int> acc(o.cols_);
  // accumulate in int, reduce periodically; p < 128 so 64 terms fit comfortably
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    int pending = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      int a = at(i, k);
      if (a == 0) continue;
      const std::uint8_t* b = o.row(k);
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * b[j];
      if (++pending == 64) {
        for (auto& x : acc) x %= p_;
        pending = 0;
      }
    }
    std::uint8_t* dst = out.row(i);
    for (std::size_t j = 0; j < o.cols_; ++j) dst[j] = static_cast<std::uint8_t>(acc[j] % p_);
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in sum");
  FpMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = static_cast<std::uint8_t>((data_[i] + o.data_[i]) % p_);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in difference");
  FpMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = static_cast<std::uint8_t>((data_[i] + p_ - o.data_[i]) % p_);
  return out;
}

FpMatrix FpMatrix::scaled(int s) const {
  s = fp_reduce(s, p_);
  FpMatrix out(*this);
  for (auto& x : out.data_) x = static_cast<std::uint8_t>(x * s % p_);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t x) { return x == 0; });
}

bool FpMatrix::operator==(const FpMatrix& o) const {
  return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<std::uint8_t> row_times(const std::vector<std::uint8_t>& v, const FpMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("shape mismatch in row_times");
  int p = m.p();
  std::vector<int> acc(m.cols(), 0);
  int pending = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k]) continue;
    const std::uint8_t* b = m.row(k);
    for (std::size_t j = 0; j < m.cols(); ++j) acc[j] += v[k] * b[j];
    if (++pending == 64) {
      for (auto& x : acc) x %= p;
      pending = 0;
    }
  }
  std::vector<std::uint8_t> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out[j] = static_cast<std::uint8_t>(acc[j] % p);
  return out;
}

void axpy(std::vector<std::uint8_t>& y, int a, const std::vector<std::uint8_t>& x, int p) {
  a = fp_reduce(a, p);
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i]) y[i] = static_cast<std::uint8_t>((y[i] + a * x[i]) % p);
}

bool is_zero_vector(const std::vector<std::uint8_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

namespace {

// In-place Gauss-Jordan. If `track` is given it receives the same row operations.
std::vector<std::size_t> eliminate(FpMatrix& m, FpMatrix* track) {
  const int p = m.p();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  auto swap_rows = [](FpMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap_ranges(a.row(i), a.row(i) + a.cols(), a.row(j));
  };
  auto scale_row = [p](FpMatrix& a, std::size_t i, int s) {
    std::uint8_t* x = a.row(i);
    for (std::size_t c = 0; c < a.cols(); ++c) x[c] = static_cast<std::uint8_t>(x[c] * s % p);
  };
  auto add_row = [p](FpMatrix& a, std::size_t dst, std::size_t src, int s) {
    std::uint8_t* d = a.row(dst);
    const std::uint8_t* x = a.row(src);
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (x[c]) d[c] = static_cast<std::uint8_t>((d[c] + s * x[c]) % p);
  };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    swap_rows(m, r, piv);
    if (track) swap_rows(*track, r, piv);
    int inv = fp_inv(m.at(r, c), p);
    scale_row(m, r, inv);
    if (track) scale_row(*track, r, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      int f = m.at(i, c);
      if (!f) continue;
      add_row(m, i, r, p - f);
      if (track) add_row(*track, i, r, p - f);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const FpMatrix& m) {
  RrefResult out{m, {}};
  out.pivot_columns = eliminate(out.reduced, nullptr);
  return out;
}

std::size_t rank(const FpMatrix& m) { return rref(m).pivot_columns.size(); }

FpMatrix row_basis(const FpMatrix& m) {
  auto r = rref(m);
  return r.reduced.row_range(0, r.pivot_columns.size());
}

FpMatrix nullspace(const FpMatrix& m) {
  auto r = rref(m);
  const int p = m.p();
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  FpMatrix out(p, 0, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint8_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) {
      int x = r.reduced.at(i, f);
      v[r.pivot_columns[i]] = static_cast<std::uint8_t>((p - x) % p);
    }
    out.append_row(v);
  }
  return out;
}

FpMatrix subspace_sum(const FpMatrix& u, const FpMatrix& v) {
  if (u.cols() != v.cols()) throw std::invalid_argument("ambient-dimension mismatch");
  FpMatrix s = u;
  s.append_rows(v);
  return row_basis(s);
}

FpMatrix subspace_intersect(const FpMatrix& u_basis, const FpMatrix& v_basis) {
  if (u_basis.cols() != v_basis.cols()) throw std::invalid_argument("ambient-dimension mismatch");
  const int p = u_basis.p();
  FpMatrix u = row_basis(u_basis), v = row_basis(v_basis);
  if (u.empty() || v.empty()) return FpMatrix(p, 0, u_basis.cols());
  // a*U = b*V  <=>  [a|b] * [U; -V] = 0, i.e. left kernel of the stacked matrix
  FpMatrix stacked = u;
  stacked.append_rows(v.scaled(p - 1));
  FpMatrix kernel = nullspace(stacked.transpose());
  FpMatrix out(p, 0, u.cols());
  for (std::size_t k = 0; k < kernel.rows(); ++k) {
    std::vector<std::uint8_t> a(kernel.row(k), kernel.row(k) + u.rows());
    out.append_row(row_times(a, u));
  }
  return row_basis(out);
}

bool subspace_equal(const FpMatrix& u, const FpMatrix& v) {
  if (u.cols() != v.cols()) return false;
  return row_basis(u) == row_basis(v);
}

bool subspace_contains(const FpMatrix& u, const FpMatrix& v) {
  return Subspace(u).contains(v);
}

Subspace::Subspace(int p, std::size_t ambient) : basis_(p, 0, ambient) {}

Subspace::Subspace(const FpMatrix& spanning) {
  auto r = rref(spanning);
  pivots_ = r.pivot_columns;
  basis_ = r.reduced.row_range(0, pivots_.size());
}

void Subspace::reduce(std::vector<std::uint8_t>& v) const {
  const int p = this->p();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    int f = v[pivots_[i]];
    if (!f) continue;
    const std::uint8_t* b = basis_.row(i);
    int s = p - f;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (b[c]) v[c] = static_cast<std::uint8_t>((v[c] + s * b[c]) % p);
  }
}

bool Subspace::contains(const std::vector<std::uint8_t>& v) const {
  if (v.size() != ambient()) throw std::invalid_argument("ambient-dimension mismatch");
  auto w = v;
  reduce(w);
  return is_zero_vector(w);
}

bool Subspace::contains(const FpMatrix& m) const {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!contains(m.row_vector(r))) return false;
  return true;
}

std::optional<std::vector<std::uint8_t>> Subspace::coordinates(const std::vector<std::uint8_t>& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<std::uint8_t> c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool Subspace::insert(std::vector<std::uint8_t> v) {
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
  if (it == v.end()) return false;
  const int p = this->p();
  std::size_t col = static_cast<std::size_t>(it - v.begin());
  int inv = fp_inv(v[col], p);
  for (auto& x : v) x = static_cast<std::uint8_t>(x * inv % p);
  // clear the new pivot column from the existing rows
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::uint8_t* b = basis_.row(i);
    int f = b[col];
    if (!f) continue;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c]) b[c] = static_cast<std::uint8_t>((b[c] + (p - f) * v[c]) % p);
  }
  // keep rows sorted by pivot column
  std::size_t pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), col) - pivots_.begin());
  FpMatrix nb(p, 0, basis_.cols());
  for (std::size_t i = 0; i < pos; ++i) nb.append_row(basis_.row(i));
  nb.append_row(v);
  for (std::size_t i = pos; i < basis_.rows(); ++i) nb.append_row(basis_.row(i));
  basis_ = std::move(nb);
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), col);
  return true;
}

LeftSolver::LeftSolver(const FpMatrix& b) : p_(b.p()), n_rows_(b.rows()) {
  FpMatrix m = b;
  FpMatrix t = FpMatrix::identity(p_, b.rows());
  pivots_ = eliminate(m, &t);
  reduced_ = m.row_range(0, pivots_.size());
  transform_ = t.row_range(0, pivots_.size());
}

std::optional<std::vector<std::uint8_t>> LeftSolver::solve(const std::vector<std::uint8_t>& w) const {
  if (w.size() != reduced_.cols()) throw std::invalid_argument("ambient-dimension mismatch");
  // w = sum_i w[pivot_i] * reduced_i if w is in the row space
  std::vector<std::uint8_t> coeff(pivots_.size());
  std::vector<std::uint8_t> rest = w;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    coeff[i] = rest[pivots_[i]];
    if (!coeff[i]) continue;
    const std::uint8_t* r = reduced_.row(i);
    int s = p_ - coeff[i];
    for (std::size_t c = 0; c < rest.size(); ++c)
      if (r[c]) rest[c] = static_cast<std::uint8_t>((rest[c] + s * r[c]) % p_);
  }
  if (!is_zero_vector(rest)) return std::nullopt;
  if (pivots_.empty()) return std::vector<std::uint8_t>(n_rows_, 0);
  return row_times(coeff, transform_);
}

}  // namespace burnside

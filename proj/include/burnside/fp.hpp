#ifndef BURNSIDE_FP_HPP
#define BURNSIDE_FP_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

bool is_odd_prime(int p);

// Throws std::invalid_argument unless p is an odd prime.
void require_odd_prime(int p);

// Arithmetic mod p, p an odd prime < 128.
class FpScalar {
 public:
  FpScalar(long long value, int p);

  int value() const { return value_; }
  int p() const { return p_; }

  FpScalar operator+(const FpScalar& o) const;
  FpScalar operator-(const FpScalar& o) const;
  FpScalar operator*(const FpScalar& o) const;
  FpScalar operator/(const FpScalar& o) const;
  FpScalar operator-() const;
  FpScalar inverse() const;
  FpScalar pow(long long e) const;

  bool operator==(const FpScalar& o) const { return p_ == o.p_ && value_ == o.value_; }
  bool operator!=(const FpScalar& o) const { return !(*this == o); }

 private:
  void check(const FpScalar& o) const;
  int value_;
  int p_;
};

// Inverse and power tables shared by the matrix code.
int fp_reduce(long long x, int p);
int fp_inv(int a, int p);
int fp_pow(long long a, long long e, int p);

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(int p, std::size_t n);
  static FpMatrix from_rows(int p, const std::vector<std::vector<long long>>& rows);
  static FpMatrix from_rows(int p, std::initializer_list<std::initializer_list<long long>> rows);
  // Stack rows of equal length; an empty list gives a 0 x cols matrix.
  static FpMatrix stack(int p, std::size_t cols, const std::vector<std::vector<std::uint8_t>>& rows);

  int p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  int at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v) { data_[r * cols_ + c] = static_cast<std::uint8_t>(fp_reduce(v, p_)); }
  std::uint8_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint8_t* row(std::size_t r) const { return data_.data() + r * cols_; }
  std::vector<std::uint8_t> row_vector(std::size_t r) const;
  const std::vector<std::uint8_t>& data() const { return data_; }

  void append_row(const std::vector<std::uint8_t>& v);
  void append_row(const std::uint8_t* v);
  void append_rows(const FpMatrix& m);
  FpMatrix select_rows(const std::vector<std::size_t>& idx) const;
  FpMatrix row_range(std::size_t begin, std::size_t end) const;

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix scaled(int s) const;
  FpMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const FpMatrix& o) const;
  bool operator!=(const FpMatrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  int p_ = 3;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

// v * m for a row vector v.
std::vector<std::uint8_t> row_times(const std::vector<std::uint8_t>& v, const FpMatrix& m);
void axpy(std::vector<std::uint8_t>& y, int a, const std::vector<std::uint8_t>& x, int p);
bool is_zero_vector(const std::vector<std::uint8_t>& v);

struct RrefResult {
  FpMatrix reduced;                 // same shape as the input, zero rows at the bottom
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);
// Rows form a basis of {v : m v^T = 0}.
FpMatrix nullspace(const FpMatrix& m);
// Nonzero rows of the rref: the canonical basis of the row space.
FpMatrix row_basis(const FpMatrix& m);
FpMatrix subspace_sum(const FpMatrix& u, const FpMatrix& v);
FpMatrix subspace_intersect(const FpMatrix& u_basis, const FpMatrix& v_basis);
bool subspace_equal(const FpMatrix& u, const FpMatrix& v);
bool subspace_contains(const FpMatrix& u, const FpMatrix& v);

// A subspace kept in canonical (rref) form for fast membership tests and coordinates.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int p, std::size_t ambient);
  explicit Subspace(const FpMatrix& spanning);

  int p() const { return basis_.p(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FpMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Subtract the span from v in place; v is left with zeros on pivot columns.
  void reduce(std::vector<std::uint8_t>& v) const;
  bool contains(const std::vector<std::uint8_t>& v) const;
  bool contains(const FpMatrix& m) const;
  // Coordinates with respect to basis(); nullopt if v is outside.
  std::optional<std::vector<std::uint8_t>> coordinates(const std::vector<std::uint8_t>& v) const;
  // Adds v if independent; returns true when the dimension grew.
  bool insert(std::vector<std::uint8_t> v);
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  FpMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// Solves c * B = w for c, where the rows of B need not be independent.
class LeftSolver {
 public:
  explicit LeftSolver(const FpMatrix& b);
  std::optional<std::vector<std::uint8_t>> solve(const std::vector<std::uint8_t>& w) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  int p_;
  std::size_t n_rows_;
  FpMatrix reduced_;    // rref of B, nonzero rows only
  FpMatrix transform_;  // reduced_ = transform_ * B
  std::vector<std::size_t> pivots_;
};

}  // namespace burnside

#endif

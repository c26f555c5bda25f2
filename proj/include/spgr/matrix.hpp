#pragma once

// Dense matrices over exact rationals (and, via the template, over MPoly),
// plus the elimination routines the rest of the library leans on.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spgr/combinat.hpp"
#include "spgr/rational.hpp"

namespace spgr {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t k = 0; k < c; ++k) m(r, k) = rows[r][k];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // zero-based
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// One-based access matching the row/column labels in the math.
  T& at1(int r, int c) { return (*this)(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)); }
  const T& at1(int r, int c) const {
    return (*this)(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1));
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_column(std::size_t c, const std::vector<T>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  /// Submatrix on the given zero-based rows and columns.
  Matrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix out(rs.size(), cs.size());
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = 0; b < cs.size(); ++b) out(a, b) = (*this)(rs[a], cs[b]);
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_, T(0));
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(r, k);
        if (x == T(0)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using RatVector = std::vector<Rat>;

/// Cofactor expansion along the first column, memoized over row subsets.
/// Only ring operations are used, so it serves both as the symbolic
/// determinant and as an oracle for det(). Exponential; meant for d <= 10.
template <class T>
T laplace_det(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("laplace_det: non-square");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n > 20) throw std::invalid_argument("laplace_det: matrix too large");
  // memo[mask] = det of the submatrix on rows `mask` and the last popcount(mask) columns
  std::vector<std::optional<T>> memo(std::size_t{1} << n);
  auto rec = [&](auto&& self, std::uint32_t mask, std::size_t col) -> T {
    if (col == n) return T(1);
    if (memo[mask]) return *memo[mask];
    T acc(0);
    int sign_pos = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (!(mask & (1u << r))) continue;
      const T& entry = m(r, col);
      if (!(entry == T(0))) {
        T sub = self(self, mask & ~(1u << r), col + 1);
        if (sign_pos % 2 == 0)
          acc += entry * sub;
        else
          acc -= entry * sub;
      }
      ++sign_pos;
    }
    memo[mask] = acc;
    return acc;
  };
  return rec(rec, static_cast<std::uint32_t>((std::size_t{1} << n) - 1), 0);
}

/// Bareiss fraction-free determinant (rows are first scaled to integers).
Rat det(const RatMatrix& m);

/// Determinant of the rows `row_set` (one-based labels) of an r x |row_set| matrix.
Rat minor(const RatMatrix& m, const IndexSet& row_set);

std::size_t rank(const RatMatrix& m);

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RrefResult rref(const RatMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column (free entry 1).
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Some x with a x = b, free variables set to zero; nullopt if inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Throws if singular.
RatMatrix inverse(const RatMatrix& m);

RatVector mat_vec(const RatMatrix& m, const RatVector& v);

/// Portable seeded stream: mt19937_64 words and rejection sampling for
/// bounded integers (std distributions differ between standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; decorrelates per-draw seeds derived from one base seed.
std::uint64_t mix_seed(std::uint64_t x);

/// Particular solution of a x = b plus a random integer combination, with
/// coefficients in [-bound, bound], of the kernel basis. Throws if a x = b
/// is inconsistent.
RatVector random_solution(const RatMatrix& a, const RatVector& b, Rng& rng, long long bound);

}  // namespace spgr

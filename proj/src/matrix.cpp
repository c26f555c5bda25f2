#include "spgr/matrix.hpp"

#include <utility>

namespace spgr {

namespace {

// Rows of m scaled by the lcm of their denominators; returns the product of
// the scales so determinants can be corrected afterwards.
std::vector<std::vector<Int>> integer_rows(const RatMatrix& m, Int* scale_product) {
  std::vector<std::vector<Int>> out(m.rows(), std::vector<Int>(m.cols()));
  Int prod = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    prod *= l;
  }
  if (scale_product) *scale_product = prod;
  return out;
}

}  // namespace

Rat det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  Int scale;
  auto a = integer_rows(m, &scale);
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rat(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rat out(a[n - 1][n - 1] * sign, scale);
  out.canonicalize();
  return out;
}

Rat minor(const RatMatrix& m, const IndexSet& row_set) {
  if (row_set.size() != m.cols())
    throw std::invalid_argument("minor: need " + std::to_string(m.cols()) + " rows, got " +
                                row_set.to_string());
  std::vector<std::size_t> rs, cs;
  for (int r : row_set) {
    if (r < 1 || static_cast<std::size_t>(r) > m.rows())
      throw std::invalid_argument("minor: row " + std::to_string(r) + " out of range");
    rs.push_back(static_cast<std::size_t>(r - 1));
  }
  for (std::size_t c = 0; c < m.cols(); ++c) cs.push_back(c);
  return det(m.select(rs, cs));
}

std::size_t rank(const RatMatrix& m) {
  // fraction-free echelon form; every entry stays a minor of the input
  auto a = integer_rows(m, nullptr);
  const std::size_t rows = m.rows(), cols = m.cols();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

RrefResult rref(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      Rat f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RrefResult rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t p : rr.pivots) is_pivot[p] = 1;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  RrefResult rr = rref(aug);
  RatVector x(a.cols(), Rat(0));
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
    if (rr.pivots[k] == a.cols()) return std::nullopt;
    x[rr.pivots[k]] = rr.reduced(k, a.cols());
  }
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n, Rat(0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult rr = rref(aug);
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1)
    throw std::domain_error("inverse: singular matrix");
  RatMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = rr.reduced(r, n + c);
  return out;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: length mismatch");
  RatVector out(m.rows(), Rat(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) out[r] += m(r, c) * v[c];
  return out;
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + static_cast<long>(x % span);
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RatVector random_solution(const RatMatrix& a, const RatVector& b, Rng& rng, long long bound) {
  if (bound < 0) throw std::invalid_argument("random_solution: negative bound");
  auto x = solve(a, b);
  if (!x) throw std::domain_error("random_solution: inconsistent system");
  for (const RatVector& k : kernel_basis(a)) {
    long c = rng.uniform(-static_cast<long>(bound), static_cast<long>(bound));
    if (c == 0) continue;
    for (std::size_t j = 0; j < k.size(); ++j)
      if (!is_zero(k[j])) (*x)[j] += Rat(c) * k[j];
  }
  return *x;
}

}  // namespace spgr

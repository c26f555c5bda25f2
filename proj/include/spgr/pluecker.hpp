#pragma once

// Points of Gr(d,2n) and of the flag variety as matrices, Plücker
// coordinates, the symplectic pairing, and degree-1 sections.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "spgr/combinat.hpp"
#include "spgr/matrix.hpp"
#include "spgr/mpoly.hpp"
#include "spgr/rational.hpp"

namespace spgr {

/// A 2n x d matrix of full column rank.
class SubspaceMatrix {
 public:
  SubspaceMatrix(RatMatrix mat, int two_n);

  /// Coordinate subspace spanned by e_{j_1}, ..., e_{j_d} in that column order.
  static SubspaceMatrix coordinate(const IndexSet& j);

  const RatMatrix& mat() const { return mat_; }
  int two_n() const { return two_n_; }
  int d() const { return static_cast<int>(mat_.cols()); }

 private:
  RatMatrix mat_;
  int two_n_;
};

/// A 2n x n matrix whose every column prefix has full rank.
class FlagMatrix {
 public:
  FlagMatrix(RatMatrix mat, int two_n);

  const RatMatrix& mat() const { return mat_; }
  int two_n() const { return two_n_; }
  int n() const { return static_cast<int>(mat_.cols()); }
  /// First d columns.
  SubspaceMatrix prefix(int d) const;

 private:
  RatMatrix mat_;
  int two_n_;
};

Rat plucker(const SubspaceMatrix& v, const IndexSet& i);

/// Generic minor on one-based rows (works for polynomial matrices too).
template <class T>
T plucker_generic(const Matrix<T>& m, const IndexSet& i) {
  if (i.size() != m.cols()) throw std::invalid_argument("plucker: cardinality mismatch");
  std::vector<std::size_t> rs, cs;
  for (int r : i) rs.push_back(static_cast<std::size_t>(r - 1));
  for (std::size_t c = 0; c < m.cols(); ++c) cs.push_back(c);
  return laplace_det(m.select(rs, cs));
}

/// M (M_j)^{-1}; throws std::domain_error if p_j = 0.
SubspaceMatrix standardize(const SubspaceMatrix& v, const IndexSet& j);

/// C(M,s,t) = sum_{k<=n} M[k,s] M[2n+1-k,t] - M[2n+1-k,s] M[k,t]; s, t one-based.
template <class T>
T pairing_generic(const Matrix<T>& m, int s, int t) {
  const int two_n = static_cast<int>(m.rows());
  const int d = static_cast<int>(m.cols());
  if (s < 1 || t < 1 || s > d || t > d) throw std::out_of_range("pairing: column out of range");
  T acc(0);
  for (int k = 1; k <= two_n / 2; ++k) {
    acc += m.at1(k, s) * m.at1(two_n + 1 - k, t);
    acc -= m.at1(two_n + 1 - k, s) * m.at1(k, t);
  }
  return acc;
}

Rat pairing(const SubspaceMatrix& v, int s, int t);
bool is_isotropic(const SubspaceMatrix& v);

/// The stored form of J: +1 at (k, 2n+1-k) and -1 at (2n+1-k, k), k <= n.
RatMatrix j_matrix(int two_n);

/// Degree-1 section sum c_i p_i over index sets of a fixed size.
class LinearSection {
 public:
  LinearSection(int d, int two_n);

  int d() const { return d_; }
  int two_n() const { return two_n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Lexicographic by index.
  const std::map<IndexSet, Rat>& terms() const { return terms_; }
  Rat coeff(const IndexSet& i) const;

  void add(const IndexSet& i, const Rat& c);
  LinearSection& operator+=(const LinearSection& o);
  LinearSection scaled(const Rat& c) const;

  /// e.g. "-p_{1,3,8} - p_{2,3,7} + p_{3,4,5}"
  std::string to_string() const;

  nlohmann::json to_json() const;
  static LinearSection from_json(const nlohmann::json& j, int d, int two_n);

  friend bool operator==(const LinearSection&, const LinearSection&) = default;

 private:
  void check(const IndexSet& i) const;

  int d_;
  int two_n_;
  std::map<IndexSet, Rat> terms_;
};

Rat evaluate(const LinearSection& sec, const SubspaceMatrix& v);

template <class T>
T evaluate_generic(const LinearSection& sec, const Matrix<T>& m) {
  T acc(0);
  for (const auto& [i, c] : sec.terms()) acc += T(c) * plucker_generic(m, i);
  return acc;
}

/// Rows = points, columns = I_{d,2n} in lexicographic order.
RatMatrix evaluation_matrix(const std::vector<SubspaceMatrix>& points, int d, int two_n);

}  // namespace spgr

#pragma once

// Sparse multivariate polynomials with rational coefficients. Used to run
// identities symbolically over chart variables.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spgr/matrix.hpp"
#include "spgr/rational.hpp"

namespace spgr {

class MPoly {
 public:
  using Exponent = std::vector<std::uint16_t>;

  MPoly() = default;
  /// Constant; arity 0 constants combine with polynomials of any arity.
  MPoly(long c);
  MPoly(const Rat& c, std::size_t arity = 0);

  static MPoly var(std::size_t arity, std::size_t k);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  int total_degree() const;

  Rat eval(const std::vector<Rat>& point) const;

  /// Human-readable; names default to x0, x1, ...
  std::string to_string(const std::vector<std::string>& names = {}) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(MPoly a);

  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  void unify(const MPoly& o);
  void add_term(const Exponent& e, const Rat& c);

  std::size_t arity_ = 0;
  std::map<Exponent, Rat> terms_;
};

using PolyMatrix = Matrix<MPoly>;

/// Cofactor determinant of a polynomial matrix.
MPoly poly_det(const PolyMatrix& m);

RatMatrix eval(const PolyMatrix& m, const std::vector<Rat>& point);

}  // namespace spgr

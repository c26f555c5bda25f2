#include "spgr/mpoly.hpp"

#include <stdexcept>

namespace spgr {

MPoly::MPoly(long c) : MPoly(Rat(c), 0) {}

MPoly::MPoly(const Rat& c, std::size_t arity) : arity_(arity) {
  if (!spgr::is_zero(c)) terms_.emplace(Exponent(arity, 0), c);
}

MPoly MPoly::var(std::size_t arity, std::size_t k) {
  if (k >= arity) throw std::invalid_argument("MPoly::var: index out of range");
  MPoly p;
  p.arity_ = arity;
  Exponent e(arity, 0);
  e[k] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

int MPoly::total_degree() const {
  int best = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (auto x : e) deg += x;
    best = std::max(best, deg);
  }
  return best;
}

void MPoly::unify(const MPoly& o) {
  if (o.arity_ == arity_ || o.arity_ == 0) return;
  if (arity_ != 0) throw std::invalid_argument("MPoly: arity mismatch");
  // promote this constant
  std::map<Exponent, Rat> lifted;
  for (auto& [e, c] : terms_) lifted.emplace(Exponent(o.arity_, 0), c);
  terms_ = std::move(lifted);
  arity_ = o.arity_;
}

void MPoly::add_term(const Exponent& e, const Rat& c) {
  if (spgr::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (spgr::is_zero(it->second)) terms_.erase(it);
  }
}

static MPoly::Exponent widen(const MPoly::Exponent& e, std::size_t arity) {
  return e.size() == arity ? e : MPoly::Exponent(arity, 0);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  unify(o);
  for (const auto& [e, c] : o.terms_) add_term(widen(e, arity_), c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  unify(o);
  for (const auto& [e, c] : o.terms_) add_term(widen(e, arity_), -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.arity_ != b.arity_ && a.arity_ != 0 && b.arity_ != 0)
    throw std::invalid_argument("MPoly: arity mismatch");
  MPoly out;
  out.arity_ = std::max(a.arity_, b.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    MPoly::Exponent wa = widen(ea, out.arity_);
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponent e = wa;
      MPoly::Exponent wb = widen(eb, out.arity_);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(e[k] + wb[k]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly operator-(MPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() == b.terms_.empty();
  if (a.arity_ == b.arity_) return a.terms_ == b.terms_;
  // a constant of arity 0 against a constant of higher arity
  MPoly diff = a;
  diff -= b;
  return diff.terms_.empty();
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
  if (arity_ != 0 && point.size() != arity_)
    throw std::invalid_argument("MPoly::eval: expected " + std::to_string(arity_) + " values");
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int p = 0; p < e[k]; ++p) term *= point[k];
    acc += term;
  }
  return acc;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest exponents first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (!mono.empty()) mono += '*';
      mono += k < names.size() ? names[k] : "x" + std::to_string(k);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    Rat a = abs(c);
    bool neg = sgn(c) < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mono.empty())
      out += spgr::to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += spgr::to_string(a) + "*" + mono;
  }
  return out;
}

MPoly poly_det(const PolyMatrix& m) { return laplace_det(m); }

RatMatrix eval(const PolyMatrix& m, const std::vector<Rat>& point) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).eval(point);
  return out;
}

}  // namespace spgr

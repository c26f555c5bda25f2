#include "spgr/pluecker.hpp"

#include <stdexcept>

#include "spgr/parallel.hpp"

namespace spgr {

SubspaceMatrix::SubspaceMatrix(RatMatrix mat, int two_n) : mat_(std::move(mat)), two_n_(two_n) {
  if (static_cast<int>(mat_.rows()) != two_n)
    throw std::invalid_argument("SubspaceMatrix: expected " + std::to_string(two_n) + " rows");
  if (rank(mat_) != mat_.cols()) throw std::invalid_argument("SubspaceMatrix: not full column rank");
}

SubspaceMatrix SubspaceMatrix::coordinate(const IndexSet& j) {
  RatMatrix m(static_cast<std::size_t>(j.two_n()), j.size(), Rat(0));
  for (std::size_t c = 0; c < j.size(); ++c) m(static_cast<std::size_t>(j[c] - 1), c) = 1;
  return SubspaceMatrix(std::move(m), j.two_n());
}

FlagMatrix::FlagMatrix(RatMatrix mat, int two_n) : mat_(std::move(mat)), two_n_(two_n) {
  if (static_cast<int>(mat_.rows()) != two_n)
    throw std::invalid_argument("FlagMatrix: expected " + std::to_string(two_n) + " rows");
  // full rank of the whole matrix implies full rank of every prefix
  if (rank(mat_) != mat_.cols()) throw std::invalid_argument("FlagMatrix: not full column rank");
}

SubspaceMatrix FlagMatrix::prefix(int d) const {
  if (d < 0 || d > n()) throw std::out_of_range("FlagMatrix::prefix");
  RatMatrix m(mat_.rows(), static_cast<std::size_t>(d));
  for (std::size_t r = 0; r < mat_.rows(); ++r)
    for (int c = 0; c < d; ++c) m(r, static_cast<std::size_t>(c)) = mat_(r, static_cast<std::size_t>(c));
  return SubspaceMatrix(std::move(m), two_n_);
}

Rat plucker(const SubspaceMatrix& v, const IndexSet& i) {
  if (static_cast<int>(i.size()) != v.d() || i.two_n() != v.two_n())
    throw std::invalid_argument("plucker: index " + i.to_string() + " does not fit a " +
                                std::to_string(v.two_n()) + "x" + std::to_string(v.d()) + " point");
  return minor(v.mat(), i);
}

SubspaceMatrix standardize(const SubspaceMatrix& v, const IndexSet& j) {
  std::vector<std::size_t> rs, cs;
  for (int r : j) rs.push_back(static_cast<std::size_t>(r - 1));
  for (std::size_t c = 0; c < v.mat().cols(); ++c) cs.push_back(c);
  RatMatrix block = v.mat().select(rs, cs);
  if (is_zero(det(block))) throw std::domain_error("standardize: point outside chart " + j.to_string());
  return SubspaceMatrix(v.mat() * inverse(block), v.two_n());
}

Rat pairing(const SubspaceMatrix& v, int s, int t) { return pairing_generic(v.mat(), s, t); }

bool is_isotropic(const SubspaceMatrix& v) {
  for (int s = 1; s <= v.d(); ++s)
    for (int t = s + 1; t <= v.d(); ++t)
      if (!is_zero(pairing(v, s, t))) return false;
  return true;
}

RatMatrix j_matrix(int two_n) {
  RatMatrix j(static_cast<std::size_t>(two_n), static_cast<std::size_t>(two_n), Rat(0));
  for (int k = 1; k <= two_n / 2; ++k) {
    j.at1(k, two_n + 1 - k) = 1;
    j.at1(two_n + 1 - k, k) = -1;
  }
  return j;
}

LinearSection::LinearSection(int d, int two_n) : d_(d), two_n_(two_n) {}

void LinearSection::check(const IndexSet& i) const {
  if (static_cast<int>(i.size()) != d_ || i.two_n() != two_n_)
    throw std::invalid_argument("LinearSection: index " + i.to_string() + " has wrong shape");
}

Rat LinearSection::coeff(const IndexSet& i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? Rat(0) : it->second;
}

void LinearSection::add(const IndexSet& i, const Rat& c) {
  check(i);
  if (spgr::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (spgr::is_zero(it->second)) terms_.erase(it);
  }
}

LinearSection& LinearSection::operator+=(const LinearSection& o) {
  if (o.d_ != d_ || o.two_n_ != two_n_) throw std::invalid_argument("LinearSection: shape mismatch");
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

LinearSection LinearSection::scaled(const Rat& c) const {
  LinearSection out(d_, two_n_);
  if (spgr::is_zero(c)) return out;
  for (const auto& [i, a] : terms_) out.terms_.emplace(i, a * c);
  return out;
}

std::string LinearSection::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : terms_) {
    bool neg = sgn(c) < 0;
    Rat a = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (a != 1) out += spgr::to_string(a) + "*";
    out += "p_{" + i.to_string() + "}";
  }
  return out;
}

nlohmann::json LinearSection::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [i, c] : terms_) {
    nlohmann::json idx = nlohmann::json::array();
    for (int v : i) idx.push_back(v);
    arr.push_back({{"index", idx}, {"coeff", spgr::to_string(c)}});
  }
  return arr;
}

LinearSection LinearSection::from_json(const nlohmann::json& j, int d, int two_n) {
  if (!j.is_array()) throw std::invalid_argument("LinearSection JSON must be an array");
  LinearSection out(d, two_n);
  for (const auto& term : j) {
    std::vector<int> idx = term.at("index").get<std::vector<int>>();
    const auto& c = term.at("coeff");
    Rat coeff = c.is_string() ? parse_rat(c.get<std::string>()) : Rat(c.get<long>());
    out.add(IndexSet(std::move(idx), two_n), coeff);
  }
  return out;
}

Rat evaluate(const LinearSection& sec, const SubspaceMatrix& v) {
  if (sec.d() != v.d() || sec.two_n() != v.two_n())
    throw std::invalid_argument("evaluate: section and point have different shapes");
  Rat acc = 0;
  for (const auto& [i, c] : sec.terms()) acc += c * plucker(v, i);
  return acc;
}

RatMatrix evaluation_matrix(const std::vector<SubspaceMatrix>& points, int d, int two_n) {
  auto cols = enumerate_indices(d, two_n);
  for (const auto& p : points)
    if (p.d() != d || p.two_n() != two_n)
      throw std::invalid_argument("evaluation_matrix: point shape mismatch");
  RatMatrix out(points.size(), cols.size());
  parallel_for(points.size(), [&](std::size_t r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = plucker(points[r], cols[c]);
  });
  return out;
}

}  // namespace spgr

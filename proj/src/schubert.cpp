#include "spgr/schubert.hpp"

#include <algorithm>
#include <stdexcept>

#include "spgr/equations.hpp"
#include "spgr/matrix.hpp"
#include "spgr/parallel.hpp"

namespace spgr {

namespace {

void require_symplectic(const IndexSet& i, const char* who) {
  if (!is_symplectic(i)) throw std::invalid_argument(std::string(who) + ": non-symplectic index " + i.to_string());
}

}  // namespace

int count_nonzero(const IndexSet& j, const IndexSet& i) {
  require_symplectic(j, "count_nonzero");
  require_symplectic(i, "count_nonzero");
  if (!bruhat_leq(j, i)) throw std::invalid_argument("count_nonzero: " + j.to_string() + " is not below " + i.to_string());
  const std::size_t d = j.size();
  int count = 0;
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = s + 1; t < d; ++t)
      if (!restriction_zero(j.without({j[s], j[t]}), i)) ++count;
  return count;
}

int codim_pairs(const IndexSet& i) {
  int count = 0;
  for (std::size_t s = 0; s < i.size(); ++s)
    for (std::size_t t = s + 1; t < i.size(); ++t)
      if (i[s] + i[t] > i.two_n()) ++count;
  return count;
}

std::optional<int> first_jump(const IndexSet& i, int offset) {
  for (std::size_t a = 0; a < i.size(); ++a)
    if (i[a] >= static_cast<int>(a + 1) + offset) return static_cast<int>(a + 1);
  return std::nullopt;
}

ShapeParams shape_params(const IndexSet& i) {
  ShapeParams p;
  p.r1 = first_jump(i, 1);
  p.r2 = first_jump(i, 2);
  p.q = i.empty() ? 0 : i.two_n() + 1 - i[i.size() - 1];
  return p;
}

int n_id_closed_form(const IndexSet& i) {
  require_symplectic(i, "n_id_closed_form");
  if (count_nonzero(i, i) == 0)
    throw std::domain_error("n_id_closed_form: N_{i,i} = 0 for " + i.to_string());
  const ShapeParams p = shape_params(i);
  const int d = static_cast<int>(i.size());
  const int r1 = *p.r1;  // N_{i,i} > 0 forces i != id
  const int m = p.r2 ? std::min(*p.r2, p.q) : p.q;
  return static_cast<int>(binomial(d - r1 + 1, 2)) - (m - r1);
}

bool is_lci(const IndexSet& i) {
  require_symplectic(i, "is_lci");
  if (codim_pairs(i) == 0) return true;
  const int r1 = *shape_params(i).r1;
  for (std::size_t s = static_cast<std::size_t>(r1 - 1); s < i.size(); ++s)
    for (std::size_t t = s + 1; t < i.size(); ++t)
      if (i[s] + i[t] <= i.two_n()) return false;
  return true;
}

namespace {

std::optional<int> flag_r1(const FlagWord& w) {
  IndexSet top = w.prefix(w.size());
  for (int a = 1; a <= w.n(); ++a)
    if (!top.contains(a)) return a;
  return std::nullopt;
}

IndexSet pattern_set(int n, int r1, bool skip_n_plus_1) {
  std::vector<int> v;
  for (int a = 1; a < r1; ++a) v.push_back(a);
  if (skip_n_plus_1) {
    v.push_back(n);
    for (int a = n + 2; a <= 2 * n + 1 - r1; ++a) v.push_back(a);
  } else {
    for (int a = n + 1; a <= 2 * n + 1 - r1; ++a) v.push_back(a);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return IndexSet(std::move(v), 2 * n);
}

void require_flag(const FlagWord& w, const char* who) {
  if (!w.is_symplectic()) throw std::invalid_argument(std::string(who) + ": non-symplectic word " + w.to_string());
  if (w.two_n() != 2 * static_cast<int>(w.size()))
    throw std::invalid_argument(std::string(who) + ": word must have n entries");
}

}  // namespace

bool flag_is_lci(const FlagWord& w) {
  require_flag(w, "flag_is_lci");
  return is_lci(w.prefix(w.size()));
}

bool flag_lci_printed_pattern(const FlagWord& w) {
  require_flag(w, "flag_lci_printed_pattern");
  auto r1 = flag_r1(w);
  if (!r1) return true;
  return w.prefix(w.size()) == pattern_set(w.n(), *r1, true);
}

bool flag_lci_pattern(const FlagWord& w) {
  if (flag_lci_printed_pattern(w)) return true;
  auto r1 = flag_r1(w);
  return w.prefix(w.size()) == pattern_set(w.n(), *r1, false);
}

int tangent_dim_a(const IndexSet& i) {
  const int d = static_cast<int>(i.size());
  int count = 0;
  for (int a = d + 1; a <= i.two_n(); ++a)
    for (int s = 1; s <= d; ++s) {
      std::vector<int> v;
      for (int k = 1; k <= d; ++k)
        if (k != s) v.push_back(k);
      v.push_back(a);  // a > d keeps v sorted
      if (bruhat_leq(IndexSet(std::move(v), i.two_n()), i)) ++count;
    }
  return count;
}

namespace {

// x_{a,s} is free at e_id iff replacing s by a in (1..d) stays below i.
bool is_free(const IndexSet& i, int a, int s) {
  const int d = static_cast<int>(i.size());
  if (a <= d) return false;
  std::vector<int> v;
  for (int k = 1; k <= d; ++k)
    if (k != s) v.push_back(k);
  v.push_back(a);
  return bruhat_leq(IndexSet(std::move(v), i.two_n()), i);
}

}  // namespace

TangentCodim tangent_codim_c_system(const IndexSet& i) {
  require_symplectic(i, "tangent_codim_c");
  const int d = static_cast<int>(i.size());
  const int two_n = i.two_n();
  // columns: free variables, numbered as encountered
  std::vector<std::pair<int, int>> vars;
  auto col_of = [&](int a, int s) -> int {
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (vars[k] == std::make_pair(a, s)) return static_cast<int>(k);
    vars.emplace_back(a, s);
    return static_cast<int>(vars.size() - 1);
  };
  struct Row {
    int plus = -1, minus = -1;
  };
  std::vector<Row> rows;
  TangentCodim out;
  for (int s = 1; s <= d; ++s)
    for (int t = s + 1; t <= d; ++t) {
      Row row;
      if (is_free(i, two_n + 1 - s, t)) row.plus = col_of(two_n + 1 - s, t);
      if (is_free(i, two_n + 1 - t, s)) row.minus = col_of(two_n + 1 - t, s);
      if (row.plus >= 0 || row.minus >= 0) ++out.touching_pairs;
      rows.push_back(row);
    }
  RatMatrix m(rows.size(), vars.size(), Rat(0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].plus >= 0) m(r, static_cast<std::size_t>(rows[r].plus)) = 1;
    if (rows[r].minus >= 0) m(r, static_cast<std::size_t>(rows[r].minus)) = -1;
  }
  out.rank = static_cast<int>(rank(m));
  return out;
}

int tangent_codim_c_direct(const IndexSet& i) {
  TangentCodim c = tangent_codim_c_system(i);
  if (c.rank != c.touching_pairs)
    throw std::logic_error("tangent_codim_c_direct: hyperplanes not independent for " + i.to_string());
  return c.rank;
}

int tangent_codim_c_closed_form(const IndexSet& i) {
  require_symplectic(i, "tangent_codim_c_closed_form");
  const ShapeParams p = shape_params(i);
  if (!p.r1) return 0;
  const int d = static_cast<int>(i.size());
  const int r = *p.r1, q = p.q;
  if (q > d) return 0;
  return (d - q + 1) * (d + q - 2 * r) / 2;
}

bool smooth_a(const IndexSet& i) {
  auto r = first_jump(i, 1);
  if (!r) return true;
  for (std::size_t k = static_cast<std::size_t>(*r); k < i.size(); ++k)
    if (i[k] != i[k - 1] + 1) return false;
  return true;
}

bool smooth_c(const IndexSet& i) {
  return tangent_dim_a(i) - tangent_codim_c_closed_form(i) == length_c(i);
}

bool smooth_c_printed_trichotomy(const IndexSet& i) {
  const ShapeParams p = shape_params(i);
  if (p.q > i.n()) return true;
  if (!p.r1) return true;
  return p.q == *p.r1 || p.q == *p.r1 + 1;
}

bool smooth_c_corrected_trichotomy(const IndexSet& i) {
  const ShapeParams p = shape_params(i);
  return smooth_c_printed_trichotomy(i) || (p.r1 && *p.r1 == static_cast<int>(i.size()));
}

ClassificationRecord classify_one(const IndexSet& i, const ClassifyOptions& opts) {
  require_symplectic(i, "classify");
  const int d = static_cast<int>(i.size());
  ClassificationRecord r;
  r.index = i;
  r.dim_a = length_a(i);
  r.dim_c = length_c(i);
  r.n_self = count_nonzero(i, i);
  r.n_id = count_nonzero(IndexSet::identity(d, i.two_n()), i);
  r.params = shape_params(i);
  r.lci = is_lci(i);
  r.tangent_dim_a = tangent_dim_a(i);
  r.tangent_codim_c = tangent_codim_c_closed_form(i);
  r.smooth_a = smooth_a(i);
  r.smooth_c = smooth_c(i);

  auto fail = [&](const std::string& what) {
    throw std::runtime_error("classify: " + what + " fails at " + i.to_string());
  };
  if (r.n_self != codim_pairs(i) || r.n_self != r.dim_a - r.dim_c) fail("N_{i,i} = codim_pairs = l_A - l_C");
  if (r.tangent_codim_c != tangent_codim_c_direct(i)) fail("tangent codimension closed form");
  if (r.smooth_a != (r.tangent_dim_a == r.dim_a)) fail("smooth_a pattern vs tangent dimension");
  if (r.n_id < r.n_self) fail("N_id >= N_self");
  if (r.lci != (r.n_id == r.n_self)) fail("lci vs N_id = N_self");
  if (opts.check_n_id_closed_form && r.n_self > 0 && n_id_closed_form(i) != r.n_id)
    fail("N_id closed form");
  return r;
}

std::vector<ClassificationRecord> classify(int d, int two_n, const ClassifyOptions& opts) {
  auto idx = enumerate_indices(d, two_n, true);
  return parallel_map<ClassificationRecord>(idx.size(), [&](std::size_t k) { return classify_one(idx[k], opts); });
}

std::string csv_header() {
  return "index,dim_a,dim_c,n_self,n_id,r1,r2,q,r,lci,tangent_dim_a,tangent_codim_c,smooth_a,smooth_c";
}

std::string to_csv(const ClassificationRecord& r) {
  auto opt = [](const std::optional<int>& v, const char* none) { return v ? std::to_string(*v) : std::string(none); };
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  return "\"" + r.index.to_string() + "\"," + std::to_string(r.dim_a) + "," + std::to_string(r.dim_c) + "," +
         std::to_string(r.n_self) + "," + std::to_string(r.n_id) + "," + opt(r.params.r1, "") + "," +
         opt(r.params.r2, "inf") + "," + std::to_string(r.params.q) + "," + opt(r.params.r1, "") + "," + b(r.lci) +
         "," + std::to_string(r.tangent_dim_a) + "," + std::to_string(r.tangent_codim_c) + "," + b(r.smooth_a) +
         "," + b(r.smooth_c);
}

}  // namespace spgr

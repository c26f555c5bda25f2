#include "spgr/combinat.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace spgr {

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return out;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = trim(text.substr(pos, next - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad integer list: '" + std::string(text) + "'");
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

std::string join(std::span<const int> v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  return out;
}

void check_two_n(int two_n) {
  if (two_n < 0 || two_n % 2 != 0)
    throw std::invalid_argument("ambient size must be a non-negative even integer, got " +
                                std::to_string(two_n));
}

}  // namespace

IndexSet::IndexSet(std::vector<int> entries, int two_n)
    : entries_(std::move(entries)), two_n_(two_n) {
  check_two_n(two_n);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] < 1 || entries_[k] > two_n)
      throw std::invalid_argument("index entry " + std::to_string(entries_[k]) +
                                  " outside [1," + std::to_string(two_n) + "]");
    if (k > 0 && entries_[k - 1] >= entries_[k])
      throw std::invalid_argument("index set must be strictly increasing: " + join(entries_));
  }
}

IndexSet IndexSet::identity(int d, int two_n) {
  std::vector<int> e(static_cast<std::size_t>(std::max(d, 0)));
  std::iota(e.begin(), e.end(), 1);
  return IndexSet(std::move(e), two_n);
}

IndexSet IndexSet::parse(std::string_view text, int two_n) {
  return IndexSet(parse_ints(text), two_n);
}

bool IndexSet::contains(int value) const {
  return std::binary_search(entries_.begin(), entries_.end(), value);
}

std::optional<std::size_t> IndexSet::position(int value) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), value);
  if (it == entries_.end() || *it != value) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

IndexSet IndexSet::without(std::initializer_list<int> values) const {
  std::vector<int> out = entries_;
  for (int v : values) {
    auto it = std::find(out.begin(), out.end(), v);
    if (it == out.end())
      throw std::invalid_argument("value " + std::to_string(v) + " not in " + to_string());
    out.erase(it);
  }
  return IndexSet(std::move(out), two_n_);
}

std::optional<IndexSet> IndexSet::with(std::initializer_list<int> values) const {
  std::vector<int> out = entries_;
  for (int v : values) {
    if (std::find(out.begin(), out.end(), v) != out.end()) return std::nullopt;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return IndexSet(std::move(out), two_n_);
}

std::string IndexSet::to_string() const { return join(entries_); }

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
  if (auto c = a.two_n_ <=> b.two_n_; c != 0) return c;
  if (auto c = a.entries_.size() <=> b.entries_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                b.entries_.begin(), b.entries_.end());
}

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<char> seen(one_line_.size() + 1, 0);
  for (int v : one_line_) {
    if (v < 1 || v > static_cast<int>(one_line_.size()) || seen[v])
      throw std::invalid_argument("not a permutation: " + join(one_line_));
    seen[v] = 1;
  }
}

std::string Permutation::to_string() const { return join(one_line_); }

FlagWord::FlagWord(std::vector<int> values, int two_n)
    : values_(std::move(values)), two_n_(two_n) {
  check_two_n(two_n);
  if (static_cast<int>(values_.size()) > two_n)
    throw std::invalid_argument("flag word longer than ambient size");
  std::vector<char> seen(static_cast<std::size_t>(two_n) + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > two_n)
      throw std::invalid_argument("flag entry " + std::to_string(v) + " outside [1," +
                                  std::to_string(two_n) + "]");
    if (seen[v]) throw std::invalid_argument("flag entries must be distinct: " + join(values_));
    seen[v] = 1;
  }
}

FlagWord FlagWord::parse(std::string_view text, int two_n) {
  return FlagWord(parse_ints(text), two_n);
}

IndexSet FlagWord::prefix(std::size_t d) const {
  if (d > values_.size()) throw std::out_of_range("flag prefix longer than word");
  std::vector<int> p(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(d));
  std::sort(p.begin(), p.end());
  return IndexSet(std::move(p), two_n_);
}

bool FlagWord::is_symplectic() const {
  std::vector<char> seen(static_cast<std::size_t>(two_n_) + 1, 0);
  for (int v : values_) seen[v] = 1;
  for (int v : values_)
    if (seen[two_n_ + 1 - v]) return false;
  return true;
}

std::string FlagWord::to_string() const { return join(values_); }

std::size_t inversions(std::span<const int> seq) {
  std::size_t count = 0;
  for (std::size_t s = 0; s < seq.size(); ++s)
    for (std::size_t t = s + 1; t < seq.size(); ++t)
      if (seq[s] > seq[t]) ++count;
  return count;
}

bool is_symplectic(const IndexSet& i) {
  for (int v : i)
    if (i.contains(i.two_n() + 1 - v)) return false;
  return true;
}

bool bruhat_leq(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("bruhat_leq: cardinality mismatch " + a.to_string() + " vs " +
                                b.to_string());
  if (a.two_n() != b.two_n()) throw std::invalid_argument("bruhat_leq: ambient size mismatch");
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] > b[t]) return false;
  return true;
}

std::vector<IndexSet> enumerate_indices(int d, int two_n, bool symplectic_only,
                                        const std::optional<IndexSet>& below) {
  check_two_n(two_n);
  if (d < 0 || d > two_n) throw std::invalid_argument("enumerate_indices: d out of range");
  if (symplectic_only && d > two_n / 2)
    throw std::invalid_argument("enumerate_indices: symplectic sets need d <= n");
  if (below && (static_cast<int>(below->size()) != d || below->two_n() != two_n))
    throw std::invalid_argument("enumerate_indices: bound has wrong shape");

  std::vector<IndexSet> out;
  std::vector<int> cur(static_cast<std::size_t>(d));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    IndexSet i(cur, two_n);
    if ((!symplectic_only || is_symplectic(i)) && (!below || bruhat_leq(i, *below)))
      out.push_back(std::move(i));
    int k = d - 1;
    while (k >= 0 && cur[k] == two_n - d + k + 1) --k;
    if (k < 0) break;
    ++cur[k];
    for (int m = k + 1; m < d; ++m) cur[m] = cur[m - 1] + 1;
  }
  return out;
}

Permutation lift_a(const IndexSet& i) {
  std::vector<int> w(i.begin(), i.end());
  for (int v = 1; v <= i.two_n(); ++v)
    if (!i.contains(v)) w.push_back(v);
  return Permutation(std::move(w));
}

Permutation lift_c(const IndexSet& i) {
  if (!is_symplectic(i)) throw std::invalid_argument("lift_c: non-symplectic " + i.to_string());
  const int two_n = i.two_n();
  const int n = two_n / 2;
  std::vector<int> w(i.begin(), i.end());
  for (int t = 1; t <= n; ++t)
    if (!i.contains(t) && !i.contains(two_n + 1 - t)) w.push_back(t);
  // remaining slots are mirror images: w_{2n+1-t} = 2n+1-w_t
  w.resize(static_cast<std::size_t>(two_n));
  for (int t = 1; t <= n; ++t) w[two_n - t] = two_n + 1 - w[t - 1];
  return Permutation(std::move(w));
}

int length_a(const IndexSet& i) {
  int total = 0;
  for (std::size_t t = 0; t < i.size(); ++t) total += i[t] - static_cast<int>(t + 1);
  return total;
}

int length_c(const IndexSet& i) {
  Permutation w = lift_c(i);
  int m = 0;
  for (int v : i)
    if (v > i.n()) ++m;
  int tau = static_cast<int>(inversions(w.one_line()));
  if ((tau + m) % 2 != 0)
    throw std::logic_error("length_c: odd tau+m for " + i.to_string());
  return (tau + m) / 2;
}

Dims dims(const IndexSet& i) { return {length_a(i), length_c(i)}; }

int flag_dim_a(const FlagWord& w) {
  return length_a(w.prefix(w.size())) + static_cast<int>(inversions(w.values()));
}

Dims flag_dims(const FlagWord& w) {
  if (!w.is_symplectic())
    throw std::invalid_argument("flag_dims: non-symplectic word " + w.to_string());
  IndexSet top = w.prefix(w.size());
  int tau = static_cast<int>(inversions(w.values()));
  return {length_a(top) + tau, length_c(top) + tau};
}

std::vector<FlagWord> flag_enumerate(int n, bool symplectic_only) {
  if (n < 0) throw std::invalid_argument("flag_enumerate: negative n");
  const int two_n = 2 * n;
  std::vector<FlagWord> out;
  std::vector<int> cur;
  std::vector<char> used(static_cast<std::size_t>(two_n) + 2, 0);
  // depth-first in increasing value order gives lexicographic output
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(cur, two_n);
      return;
    }
    for (int v = 1; v <= two_n; ++v) {
      if (used[v]) continue;
      if (symplectic_only && used[two_n + 1 - v]) continue;
      used[v] = 1;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[v] = 0;
    }
  };
  rec(rec);
  return out;
}

bool flag_bruhat_leq(const FlagWord& u, const FlagWord& w) {
  if (u.size() != w.size() || u.two_n() != w.two_n())
    throw std::invalid_argument("flag_bruhat_leq: length mismatch");
  for (std::size_t d = 1; d <= u.size(); ++d)
    if (!bruhat_leq(u.prefix(d), w.prefix(d))) return false;
  return true;
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace spgr

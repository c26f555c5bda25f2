#include "spgr/sampler.hpp"

#include <stdexcept>

namespace spgr {

SampleConfig SampleConfig::draw(std::uint64_t k) const {
  SampleConfig out = *this;
  out.seed = mix_seed(seed + k);
  return out;
}

RatVector pairing_row(const RatVector& c) {
  const int two_n = static_cast<int>(c.size());
  RatVector r(c.size(), Rat(0));
  for (int k = 1; k <= two_n / 2; ++k) {
    r[two_n - k] += c[k - 1];
    r[k - 1] -= c[two_n - k];
  }
  return r;
}

namespace {

void check_cfg(const SampleConfig& cfg) {
  if (cfg.coefficient_bound < 1) throw std::invalid_argument("coefficient_bound must be >= 1");
  if (cfg.max_resamples < 1) throw std::invalid_argument("max_resamples must be >= 1");
}

// Random x supported on `free` rows plus a unit entry at `lead` (lead < 0:
// none), isotropic against every column in `prior`.
RatVector constrained_column(int two_n, const std::vector<int>& free, int lead,
                             const std::vector<RatVector>& prior, Rng& rng, long long bound) {
  RatMatrix a(prior.size(), free.size());
  RatVector b(prior.size(), Rat(0));
  for (std::size_t k = 0; k < prior.size(); ++k) {
    RatVector row = pairing_row(prior[k]);
    for (std::size_t f = 0; f < free.size(); ++f) a(k, f) = row[static_cast<std::size_t>(free[f] - 1)];
    if (lead > 0) b[k] = -row[static_cast<std::size_t>(lead - 1)];
  }
  RatVector y = random_solution(a, b, rng, bound);
  RatVector x(static_cast<std::size_t>(two_n), Rat(0));
  for (std::size_t f = 0; f < free.size(); ++f) x[static_cast<std::size_t>(free[f] - 1)] = y[f];
  if (lead > 0) x[static_cast<std::size_t>(lead - 1)] = 1;
  return x;
}

RatMatrix from_columns(int two_n, const std::vector<RatVector>& cols) {
  RatMatrix m(static_cast<std::size_t>(two_n), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

}  // namespace

SubspaceMatrix sample_isotropic(int d, int two_n, const SampleConfig& cfg) {
  check_cfg(cfg);
  if (d < 0 || two_n % 2 != 0 || d > two_n / 2)
    throw std::invalid_argument("sample_isotropic: need 0 <= d <= n");
  Rng rng(cfg.seed);
  std::vector<int> all(static_cast<std::size_t>(two_n));
  for (int r = 1; r <= two_n; ++r) all[r - 1] = r;
  std::vector<RatVector> cols;
  int budget = cfg.max_resamples;
  while (static_cast<int>(cols.size()) < d) {
    RatVector x = constrained_column(two_n, all, -1, cols, rng, cfg.coefficient_bound);
    cols.push_back(x);
    if (rank(from_columns(two_n, cols)) == cols.size()) continue;
    cols.pop_back();
    if (--budget == 0) throw std::runtime_error("sample_isotropic: resample budget exhausted");
  }
  return SubspaceMatrix(from_columns(two_n, cols), two_n);
}

SubspaceMatrix sample_schubert(const IndexSet& i, bool symplectic, const SampleConfig& cfg) {
  check_cfg(cfg);
  if (symplectic && !is_symplectic(i))
    throw std::invalid_argument("sample_schubert: non-symplectic index " + i.to_string());
  const int two_n = i.two_n();
  Rng rng(cfg.seed);
  std::vector<RatVector> cols;
  const std::vector<RatVector> none;
  for (int lead : i) {
    std::vector<int> free;
    for (int a = 1; a < lead; ++a) free.push_back(a);
    cols.push_back(constrained_column(two_n, free, lead, symplectic ? cols : none, rng,
                                      cfg.coefficient_bound));
  }
  return SubspaceMatrix(from_columns(two_n, cols), two_n);
}

FlagMatrix sample_flag(const FlagWord& w, bool symplectic, const SampleConfig& cfg) {
  check_cfg(cfg);
  if (symplectic && !w.is_symplectic())
    throw std::invalid_argument("sample_flag: non-symplectic word " + w.to_string());
  const int two_n = w.two_n();
  Rng rng(cfg.seed);
  std::vector<RatVector> cols;
  const std::vector<RatVector> none;
  std::vector<char> used(static_cast<std::size_t>(two_n) + 1, 0);
  for (std::size_t t = 0; t < w.size(); ++t) {
    std::vector<int> free;
    for (int a = 1; a < w[t]; ++a)
      if (!used[a]) free.push_back(a);
    cols.push_back(constrained_column(two_n, free, w[t], symplectic ? cols : none, rng,
                                      cfg.coefficient_bound));
    used[w[t]] = 1;
  }
  return FlagMatrix(from_columns(two_n, cols), two_n);
}

}  // namespace spgr

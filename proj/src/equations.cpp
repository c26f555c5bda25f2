#include "spgr/equations.hpp"

#include <algorithm>
#include <type_traits>
#include <stdexcept>
#include <unordered_map>

#include "spgr/parallel.hpp"

namespace spgr {

LinearSection build_E(const IndexSet& i_prime, int n) {
  const int two_n = 2 * n;
  if (i_prime.two_n() != two_n)
    throw std::invalid_argument("build_E: index " + i_prime.to_string() + " is not in {1.." +
                                std::to_string(two_n) + "}");
  const int d = static_cast<int>(i_prime.size()) + 2;
  if (d > two_n) throw std::invalid_argument("build_E: index too large");
  LinearSection out(d, two_n);
  for (int t = 1; t <= n; ++t) {
    const int u = two_n + 1 - t;
    if (i_prime.contains(t) || i_prime.contains(u)) continue;
    std::vector<int> seq(i_prime.begin(), i_prime.end());
    seq.push_back(t);
    seq.push_back(u);
    int sign = inversions(seq) % 2 == 0 ? 1 : -1;
    out.add(*i_prime.with({t, u}), Rat(sign));
  }
  return out;
}

std::vector<LinearSection> e_family(int d, int two_n) {
  std::vector<LinearSection> out;
  if (d < 2) return out;
  for (const IndexSet& ip : enumerate_indices(d - 2, two_n)) out.push_back(build_E(ip, two_n / 2));
  return out;
}

RatMatrix e_coefficient_matrix(int d, int two_n) {
  auto family = e_family(d, two_n);
  auto cols = enumerate_indices(d, two_n);
  RatMatrix m(family.size(), cols.size(), Rat(0));
  for (std::size_t r = 0; r < family.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = family[r].coeff(cols[c]);
  return m;
}

std::size_t e_span_rank(int d, int two_n) {
  if (d < 2) return 0;
  return rank(e_coefficient_matrix(d, two_n));
}

bool restriction_zero(const IndexSet& i_prime, const IndexSet& i) {
  if (i_prime.size() + 2 != i.size() || i_prime.two_n() != i.two_n())
    throw std::invalid_argument("restriction_zero: need |i'| = |i| - 2, got " +
                                i_prime.to_string() + " and " + i.to_string());
  const int two_n = i.two_n();
  for (int t = 1; t <= two_n / 2; ++t) {
    auto term = i_prime.with({t, two_n + 1 - t});
    if (term && bruhat_leq(*term, i)) return false;
  }
  return true;
}

LinearSection restrict(const LinearSection& sec, const IndexSet& i) {
  if (static_cast<int>(i.size()) != sec.d() || i.two_n() != sec.two_n())
    throw std::invalid_argument("restrict: index shape does not match the section");
  LinearSection out(sec.d(), sec.two_n());
  for (const auto& [idx, c] : sec.terms())
    if (bruhat_leq(idx, i)) out.add(idx, c);
  return out;
}

std::string to_string(Mode m) { return m == Mode::Symbolic ? "symbolic" : "sampled"; }

namespace {

std::uint64_t mask_of(const IndexSet& i) {
  std::uint64_t m = 0;
  for (int v : i) m |= std::uint64_t{1} << v;
  return m;
}

// Lazily computed Plücker coordinates of one matrix.
template <class T>
class MinorCache {
 public:
  explicit MinorCache(const Matrix<T>& m) : m_(m) {}
  const T& get(const IndexSet& i) {
    auto key = mask_of(i);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(key, compute(i)).first->second;
  }
  T eval(const LinearSection& sec) {
    T acc(0);
    for (const auto& [idx, c] : sec.terms()) {
      const T& p = get(idx);
      if (!(p == T(0))) acc += T(c) * p;
    }
    return acc;
  }

 private:
  T compute(const IndexSet& i) {
    if constexpr (std::is_same_v<T, Rat>)
      return minor(m_, i);
    else
      return plucker_generic(m_, i);
  }
  const Matrix<T>& m_;
  std::unordered_map<std::uint64_t, T> memo_;
};

// Pins a global sign from pairs (lhs, rhs) expected to satisfy lhs = eps * rhs.
struct SignTracker {
  int sign = 0;
  bool ok = true;
  std::size_t informative = 0;
  std::string detail;

  template <class T>
  void observe(const T& lhs, const T& rhs, const std::string& where) {
    if (!ok) return;
    const bool lz = lhs == T(0), rz = rhs == T(0);
    if (lz && rz) return;
    int s = 0;
    if (lhs == rhs)
      s = 1;
    else if (lhs == -rhs)
      s = -1;
    if (s == 0) {
      ok = false;
      detail = "sides differ at " + where;
      return;
    }
    ++informative;
    if (sign == 0) {
      sign = s;
    } else if (sign != s) {
      ok = false;
      detail = "sign flips at " + where;
    }
  }
};

SignedIdentityReport finish(const SignTracker& tr, Mode mode, std::size_t trials,
                            std::string label) {
  SignedIdentityReport r;
  r.holds = tr.ok;
  r.pinned_sign = tr.sign;
  r.trials = trials;
  r.informative_trials = tr.informative;
  r.mode = mode;
  r.label = std::move(label);
  r.detail = tr.detail;
  return r;
}

// (-1)^k
int parity_sign(long long k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

PolyMatrix chart_matrix(const IndexSet& i, std::vector<std::string>* names) {
  const int two_n = i.two_n();
  const std::size_t d = i.size();
  std::size_t arity = (static_cast<std::size_t>(two_n) - d) * d;
  PolyMatrix m(static_cast<std::size_t>(two_n), d, MPoly(0));
  if (names) names->clear();
  std::size_t k = 0;
  for (int a = 1; a <= two_n; ++a) {
    if (auto pos = i.position(a)) {
      m.at1(a, static_cast<int>(*pos) + 1) = MPoly(Rat(1), arity);
      continue;
    }
    for (std::size_t c = 1; c <= d; ++c) {
      m.at1(a, static_cast<int>(c)) = MPoly::var(arity, k++);
      if (names) names->push_back("x_{" + std::to_string(a) + "," + std::to_string(c) + "}");
    }
  }
  return m;
}

SubspaceMatrix random_standard(const IndexSet& i, Rng& rng, long long bound) {
  const int two_n = i.two_n();
  RatMatrix m(static_cast<std::size_t>(two_n), i.size(), Rat(0));
  for (int a = 1; a <= two_n; ++a) {
    if (auto pos = i.position(a)) {
      m.at1(a, static_cast<int>(*pos) + 1) = 1;
      continue;
    }
    for (std::size_t c = 1; c <= i.size(); ++c) m.at1(a, static_cast<int>(c)) = rng.uniform(-bound, bound);
  }
  return SubspaceMatrix(std::move(m), two_n);
}

namespace {

std::string pair_label(const IndexSet& i, int s, int t) {
  return "i=" + i.to_string() + " (s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

template <class T>
void observe_pairings(const Matrix<T>& m, const IndexSet& i, std::vector<SignTracker>& trackers,
                      const std::string& where) {
  MinorCache<T> cache(m);
  const int d = static_cast<int>(i.size());
  const int n = i.n();
  const T& p_i = cache.get(i);
  std::size_t k = 0;
  for (int s = 1; s <= d; ++s)
    for (int t = s + 1; t <= d; ++t, ++k) {
      T lhs = pairing_generic(m, s, t) * p_i;
      T rhs = cache.eval(build_E(i.without({i[s - 1], i[t - 1]}), n));
      trackers[k].observe(lhs, rhs, where);
    }
}

}  // namespace

std::vector<SignedIdentityReport> check_pairing_identities(const IndexSet& i, Mode mode,
                                                           int trials, const SampleConfig& cfg) {
  const int d = static_cast<int>(i.size());
  if (d < 2) return {};
  std::vector<SignTracker> trackers(static_cast<std::size_t>(d * (d - 1) / 2));
  std::size_t done = 0;
  if (mode == Mode::Symbolic) {
    observe_pairings(chart_matrix(i), i, trackers, "symbolic chart");
    done = 1;
  } else {
    for (int k = 0; k < trials; ++k) {
      Rng rng(cfg.draw(static_cast<std::uint64_t>(k)).seed);
      SubspaceMatrix v = random_standard(i, rng, cfg.coefficient_bound);
      observe_pairings(v.mat(), i, trackers, "trial " + std::to_string(k));
      ++done;
    }
  }
  std::vector<SignedIdentityReport> out;
  std::size_t k = 0;
  for (int s = 1; s <= d; ++s)
    for (int t = s + 1; t <= d; ++t) out.push_back(finish(trackers[k++], mode, done, pair_label(i, s, t)));
  return out;
}

SignedIdentityReport check_pairing_identity(const IndexSet& i, int s, int t, Mode mode, int trials,
                                            const SampleConfig& cfg) {
  const int d = static_cast<int>(i.size());
  if (s == t) throw std::invalid_argument("check_pairing_identity: s = t");
  if (s < 1 || t < 1 || s > d || t > d || s > t)
    throw std::invalid_argument("check_pairing_identity: need 1 <= s < t <= d");
  auto all = check_pairing_identities(i, mode, trials, cfg);
  // position of (s,t) in the (1,2),(1,3),... ordering
  std::size_t k = 0;
  for (int a = 1; a < s; ++a) k += static_cast<std::size_t>(d - a);
  k += static_cast<std::size_t>(t - s - 1);
  return all[k];
}

namespace {

template <class T>
void observe_local(const Matrix<T>& m, const IndexSet& jp, const IndexSet& i, SignTracker& tr,
                   const std::string& where) {
  MinorCache<T> cache(m);
  const int d = static_cast<int>(i.size());
  const int n = i.n();
  T lhs = cache.eval(build_E(jp, n)) * cache.get(i);
  T rhs(0);
  for (int k = 1; k <= d; ++k)
    for (int l = k + 1; l <= d; ++l) {
      auto term = jp.with({i[k - 1], i[l - 1]});
      if (!term) continue;
      std::vector<int> seq(jp.begin(), jp.end());
      seq.push_back(i[k - 1]);
      seq.push_back(i[l - 1]);
      int sign = parity_sign(k + l + static_cast<long long>(inversions(seq)));
      const T& p = cache.get(*term);
      if (p == T(0)) continue;
      T e = cache.eval(build_E(i.without({i[k - 1], i[l - 1]}), n));
      if (sign > 0)
        rhs += e * p;
      else
        rhs -= e * p;
    }
  tr.observe(lhs, rhs, where);
}

}  // namespace

SignedIdentityReport check_local_relation(const IndexSet& j_prime, const IndexSet& i, Mode mode,
                                          int trials, const SampleConfig& cfg) {
  if (j_prime.size() + 2 != i.size() || j_prime.two_n() != i.two_n())
    throw std::invalid_argument("check_local_relation: need |j'| = |i| - 2");
  SignTracker tr;
  std::size_t done = 0;
  if (mode == Mode::Symbolic) {
    observe_local(chart_matrix(i), j_prime, i, tr, "symbolic chart");
    done = 1;
  } else {
    const int two_n = i.two_n();
    for (int k = 0; k < trials; ++k) {
      Rng rng(cfg.draw(static_cast<std::uint64_t>(k)).seed);
      // a generic point of A_i, not normalized
      RatMatrix m(static_cast<std::size_t>(two_n), i.size());
      for (int guard = 0;; ++guard) {
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = rng.uniform(-cfg.coefficient_bound, cfg.coefficient_bound);
        if (!is_zero(minor(m, i))) break;
        if (guard >= cfg.max_resamples)
          throw std::runtime_error("check_local_relation: could not land in the chart");
      }
      observe_local(m, j_prime, i, tr, "trial " + std::to_string(k));
      ++done;
    }
  }
  return finish(tr, mode, done, "j'=" + j_prime.to_string() + " i=" + i.to_string());
}

namespace {

// E_{x\{x_u,x_v}}(V) / p_x(V) for positions u < v of the sorted set x.
Rat e_ratio(MinorCache<Rat>& cache, const IndexSet& x, int u, int v) {
  return cache.eval(build_E(x.without({x[u - 1], x[v - 1]}), x.n())) / cache.get(x);
}

void check_flag_args(const FlagWord& w, int d1, int d2, int s, int t) {
  const int n = static_cast<int>(w.size());
  if (d1 < 2 || d1 > d2 || d2 > n) throw std::invalid_argument("flag relation: need 2 <= d1 <= d2 <= n");
  if (s < 1 || s >= t || t > d1) throw std::invalid_argument("flag relation: need 1 <= s < t <= d1");
}

}  // namespace

SignedIdentityReport check_flag_relation(const FlagWord& w, int d1, int d2, int s, int t, int trials,
                                         const SampleConfig& cfg) {
  check_flag_args(w, d1, d2, s, t);
  const IndexSet i = w.prefix(static_cast<std::size_t>(d1));
  const IndexSet j = w.prefix(static_cast<std::size_t>(d2));
  const std::string label = "w=" + w.to_string() + " d1=" + std::to_string(d1) +
                            " d2=" + std::to_string(d2) + " (s,t)=(" + std::to_string(s) + "," +
                            std::to_string(t) + ")";
  const int s0 = static_cast<int>(*j.position(i[s - 1])) + 1;
  const int t0 = static_cast<int>(*j.position(i[t - 1])) + 1;

  struct Candidate {
    int u, v, sign;
    bool alive = true;
  };
  std::vector<Candidate> cands;
  cands.push_back({s0, t0, 1});
  cands.push_back({s0, t0, -1});
  for (int u = 1; u <= d2; ++u)
    for (int v = u + 1; v <= d2; ++v)
      if (u != s0 || v != t0) {
        cands.push_back({u, v, 1});
        cands.push_back({u, v, -1});
      }

  std::size_t informative = 0;
  for (int k = 0; k < trials; ++k) {
    FlagMatrix f = sample_flag(w, false, cfg.draw(static_cast<std::uint64_t>(k)));
    SubspaceMatrix v1 = f.prefix(d1), v2 = f.prefix(d2);
    MinorCache<Rat> c1(v1.mat()), c2(v2.mat());
    Rat lhs = e_ratio(c1, i, s, t);
    if (!is_zero(lhs)) ++informative;
    for (auto& c : cands) {
      if (!c.alive) continue;
      Rat rhs = e_ratio(c2, j, c.u, c.v);
      if (lhs != c.sign * rhs) c.alive = false;
    }
  }
  SignedIdentityReport r;
  r.mode = Mode::Sampled;
  r.trials = static_cast<std::size_t>(trials);
  r.informative_trials = informative;
  r.label = label;
  for (const auto& c : cands)
    if (c.alive) {
      r.holds = true;
      r.pinned_sign = c.sign;
      r.matched_s = c.u;
      r.matched_t = c.v;
      r.detail = "matched (s',t')=(" + std::to_string(c.u) + "," + std::to_string(c.v) + ")";
      return r;
    }
  r.detail = "no (s',t',sign) with s'<t'<=" + std::to_string(d2) + " holds at every sample";
  return r;
}

SignedIdentityReport check_flag_expansion(const FlagWord& w, int d1, int s, int t, int trials,
                                          const SampleConfig& cfg) {
  check_flag_args(w, d1, d1 + 1, s, t);
  const IndexSet i = w.prefix(static_cast<std::size_t>(d1));
  const IndexSet j = w.prefix(static_cast<std::size_t>(d1 + 1));
  const int a = w[static_cast<std::size_t>(d1)];
  const int sp = static_cast<int>(*j.position(i[s - 1])) + 1;
  const int tp = static_cast<int>(*j.position(i[t - 1])) + 1;
  const int ap = static_cast<int>(*j.position(a)) + 1;
  SignTracker tr;
  // C_x(u,v) via the corrected pairing identity, antisymmetric in (u,v)
  auto c_of = [](MinorCache<Rat>& cache, const IndexSet& x, int u, int v) -> Rat {
    if (u == v) return 0;
    int sign = 1;
    if (u > v) {
      std::swap(u, v);
      sign = -1;
    }
    return sign * parity_sign(u + v + 1) * e_ratio(cache, x, u, v);
  };
  for (int k = 0; k < trials; ++k) {
    FlagMatrix f = sample_flag(w, false, cfg.draw(static_cast<std::uint64_t>(k)));
    SubspaceMatrix v1 = f.prefix(d1), v2 = f.prefix(d1 + 1);
    MinorCache<Rat> c1(v1.mat()), c2(v2.mat());
    RatMatrix std_i = standardize(v1, i).mat();
    Rat alpha_s = std_i.at1(a, s), alpha_t = std_i.at1(a, t);
    Rat lhs = c_of(c1, i, s, t);
    Rat rhs = c_of(c2, j, sp, tp) + alpha_t * c_of(c2, j, sp, ap) + alpha_s * c_of(c2, j, ap, tp);
    tr.observe(lhs, rhs, "trial " + std::to_string(k));
  }
  auto r = finish(tr, Mode::Sampled, static_cast<std::size_t>(trials),
                  "w=" + w.to_string() + " d1=" + std::to_string(d1) + " (s,t)=(" +
                      std::to_string(s) + "," + std::to_string(t) + ")");
  // the expansion is an equality, not an equality up to sign
  if (r.holds && r.pinned_sign == -1) {
    r.holds = false;
    r.detail = "expansion holds only up to sign";
  }
  return r;
}

SignedIdentityReport lemma_partition_identity(const IndexSet& half, int n) {
  if (n % 2 != 0) throw std::invalid_argument("lemma_partition_identity: n must be even");
  const int m = n / 2;
  const int two_n = 2 * n;
  if (static_cast<int>(half.size()) != m) throw std::invalid_argument("lemma_partition_identity: |half| != n/2");
  for (int v : half)
    if (v > n) throw std::invalid_argument("lemma_partition_identity: half must lie in {1..n}");
  auto mirrored = [&](const std::vector<int>& base) {
    std::vector<int> out = base;
    for (int v : base) out.push_back(two_n + 1 - v);
    std::sort(out.begin(), out.end());
    return IndexSet(std::move(out), two_n);
  };
  std::vector<int> lo(half.begin(), half.end()), comp;
  for (int v = 1; v <= n; ++v)
    if (!half.contains(v)) comp.push_back(v);
  const IndexSet i = mirrored(lo), j = mirrored(comp);

  LinearSection lhs(n, two_n);
  lhs.add(i, Rat(parity_sign(m - 1)));
  lhs.add(j, Rat(1));

  LinearSection rhs(n, two_n);
  for (const IndexSet& ls : enumerate_indices(m - 1, n)) {
    std::vector<int> base(ls.begin(), ls.end());
    IndexSet l = mirrored(base);
    int common = 0;
    for (int v : l)
      if (j.contains(v)) ++common;
    const int a = common / 2;
    Rat c(parity_sign(a), static_cast<long>(m * binomial(m - 1, a)));
    c.canonicalize();
    rhs += build_E(l, n).scaled(c);
  }
  SignedIdentityReport r;
  r.mode = Mode::Symbolic;
  r.trials = 1;
  r.label = "n=" + std::to_string(n) + " half=" + half.to_string();
  if (rhs == lhs) {
    r.holds = true;
    r.pinned_sign = 1;
  } else if (rhs == lhs.scaled(Rat(-1))) {
    r.holds = true;
    r.pinned_sign = -1;
  } else {
    r.detail = "lhs " + lhs.to_string() + " vs rhs " + rhs.to_string();
  }
  r.informative_trials = r.holds ? 1 : 0;
  return r;
}

VanishingReport vanishing_space(int d, int two_n, std::size_t n_points, std::uint64_t seed) {
  const std::size_t extra = std::max<std::size_t>(1, n_points / 4);
  SampleConfig cfg;
  cfg.seed = seed;
  auto points = parallel_map<std::optional<SubspaceMatrix>>(n_points + extra, [&](std::size_t k) {
    return std::optional<SubspaceMatrix>(sample_isotropic(d, two_n, cfg.draw(k)));
  });
  std::vector<SubspaceMatrix> first, all;
  for (std::size_t k = 0; k < points.size(); ++k) {
    all.push_back(*points[k]);
    if (k < n_points) first.push_back(*points[k]);
  }
  RatMatrix full = evaluation_matrix(all, d, two_n);
  RatMatrix head(n_points, full.cols());
  for (std::size_t r = 0; r < n_points; ++r)
    for (std::size_t c = 0; c < full.cols(); ++c) head(r, c) = full(r, c);
  VanishingReport rep;
  rep.points = all.size();
  const std::size_t dim_head = full.cols() - rank(head);
  rep.kernel = kernel_basis(full);
  rep.dim = rep.kernel.size();
  rep.stable = dim_head == rep.dim;
  return rep;
}

std::size_t vanishing_space_dim(int d, int two_n, std::size_t n_points, std::uint64_t seed) {
  auto rep = vanishing_space(d, two_n, n_points, seed);
  if (!rep.stable)
    throw std::runtime_error("vanishing_space_dim: kernel dimension changed when adding points");
  return rep.dim;
}

bool in_e_span(int d, int two_n, const std::vector<RatVector>& vectors) {
  RatMatrix e = e_coefficient_matrix(d, two_n);
  RatMatrix stacked(e.rows() + vectors.size(), e.cols());
  for (std::size_t r = 0; r < e.rows(); ++r)
    for (std::size_t c = 0; c < e.cols(); ++c) stacked(r, c) = e(r, c);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != e.cols()) throw std::invalid_argument("in_e_span: vector length mismatch");
    for (std::size_t c = 0; c < e.cols(); ++c) stacked(e.rows() + k, c) = vectors[k][c];
  }
  return rank(stacked) == rank(e);
}

}  // namespace spgr

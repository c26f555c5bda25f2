#include "spgr/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "spgr/combinat.hpp"
#include "spgr/equations.hpp"
#include "spgr/parallel.hpp"
#include "spgr/sampler.hpp"
#include "spgr/schubert.hpp"

namespace spgr {

std::string CheckResult::status() const {
  if (passed) return "PASS";
  return kind == Kind::Printed ? "ERRATUM" : "FAIL";
}

void CheckResult::record(bool ok, const std::string& where) {
  ++cases;
  if (ok) return;
  ++failures;
  if (passed) counterexample = where;
  passed = false;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "lemma", "span", "counts",
                                                 "tangent",    "flags", "schubert"};
  return names;
}

std::string to_text(const CheckResult& r) {
  std::string line = r.status() + " " + r.suite + "/" + r.name + " cases=" + std::to_string(r.cases);
  if (r.failures) line += " failures=" + std::to_string(r.failures) + " first=" + r.counterexample;
  if (!r.note.empty()) line += " (" + r.note + ")";
  return line;
}

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j = {{"suite", r.suite},         {"name", r.name},
                      {"status", r.status()},     {"cases", r.cases},
                      {"failures", r.failures},   {"printed_statement", r.kind == CheckResult::Kind::Printed}};
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

int flag_dim_a_from_lift(const std::vector<int>& w, int two_n) {
  std::vector<int> full = w;
  for (int v = 1; v <= two_n; ++v)
    if (std::find(w.begin(), w.end(), v) == w.end()) full.push_back(v);
  return static_cast<int>(inversions(full));
}

int flag_dim_c_from_lift(const std::vector<int>& w, int two_n) {
  std::vector<int> full = w;
  for (auto it = w.rbegin(); it != w.rend(); ++it) full.push_back(two_n + 1 - *it);
  int m = 0;
  for (int v : w)
    if (v > two_n / 2) ++m;
  return (static_cast<int>(inversions(full)) + m) / 2;
}

namespace {

using Kind = CheckResult::Kind;

CheckResult make(const std::string& suite, const std::string& name, Kind kind = Kind::Check) {
  CheckResult r;
  r.suite = suite;
  r.name = name;
  r.kind = kind;
  return r;
}

std::vector<int> even_sizes(int lo, int hi) {
  std::vector<int> out;
  for (int t = lo; t <= hi; t += 2) out.push_back(t);
  return out;
}

SampleConfig config(const VerifyOptions& o, std::uint64_t salt) {
  SampleConfig c;
  c.seed = mix_seed(o.seed ^ (salt * 0x9e3779b97f4a7c15ULL));
  return c;
}

std::vector<CheckResult> suite_identities(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const std::string S = "identities";

  auto pairing = [&](Mode mode, int d_max, int two_n_cap, const std::string& name) {
    CheckResult r = make(S, name);
    for (int two_n : even_sizes(4, std::min(o.two_n_max, two_n_cap)))
      for (int d = 2; d <= std::min(d_max, two_n / 2); ++d) {
        auto idx = enumerate_indices(d, two_n);
        auto reports = parallel_map<std::vector<SignedIdentityReport>>(idx.size(), [&](std::size_t k) {
          return check_pairing_identities(idx[k], mode, o.samples, config(o, 100 + k));
        });
        for (const auto& rs : reports) {
          int s = 1, t = 2;
          for (const auto& rep : rs) {
            const int expected = (s + t + 1) % 2 == 0 ? 1 : -1;
            r.record(rep.holds && rep.pinned_sign == expected, rep.label + " " + rep.detail);
            if (++t > d) t = ++s + 1;
          }
        }
      }
    r.note = "eps = (-1)^(s+t+1)";
    out.push_back(r);
  };
  pairing(Mode::Symbolic, 3, 8, "pairing-symbolic");
  pairing(Mode::Sampled, 5, 10, "pairing-sampled");

  {
    CheckResult r = make(S, "local-relation");
    std::set<int> signs;
    const int trials = std::max(5, o.samples / 10);
    for (int two_n : even_sizes(4, std::min(o.two_n_max, 8)))
      for (int d = 2; d <= two_n / 2; ++d) {
        std::vector<std::pair<IndexSet, IndexSet>> cases;
        for (const auto& i : enumerate_indices(d, two_n))
          for (const auto& jp : enumerate_indices(d - 2, two_n)) cases.emplace_back(jp, i);
        auto reps = parallel_map<SignedIdentityReport>(cases.size(), [&](std::size_t k) {
          return check_local_relation(cases[k].first, cases[k].second, Mode::Sampled, trials, config(o, 7000 + k));
        });
        for (const auto& rep : reps) {
          r.record(rep.holds, rep.label + " " + rep.detail);
          if (rep.pinned_sign) signs.insert(rep.pinned_sign);
        }
      }
    std::string s;
    for (int v : signs) s += (s.empty() ? "" : ",") + std::to_string(v);
    r.note = "pinned eps in {" + s + "}";
    out.push_back(r);
  }

  CheckResult printed = make(S, "flag-relation-single-pair", Kind::Printed);
  CheckResult expansion = make(S, "flag-relation-expansion");
  const int trials = std::max(5, o.samples / 4);
  for (int n = 2; n <= std::min(3, o.two_n_max / 2); ++n)
    for (const FlagWord& w : flag_enumerate(n, false))
      for (int d1 = 2; d1 <= n; ++d1)
        for (int s = 1; s <= d1; ++s)
          for (int t = s + 1; t <= d1; ++t) {
            for (int d2 = d1 + 1; d2 <= n; ++d2) {
              auto rep = check_flag_relation(w, d1, d2, s, t, trials, config(o, 31));
              printed.record(rep.holds, rep.label);
            }
            if (d1 < n) {
              auto rep = check_flag_expansion(w, d1, s, t, trials, config(o, 37));
              expansion.record(rep.holds, rep.label + " " + rep.detail);
            }
          }
  out.push_back(printed);
  out.push_back(expansion);
  return out;
}

std::vector<CheckResult> suite_lemma(const VerifyOptions&) {
  std::vector<CheckResult> out;
  for (int m = 1; m <= 3; ++m) {
    CheckResult r = make("lemma", "partition-identity-m" + std::to_string(m));
    std::set<int> signs;
    for (const IndexSet& half : enumerate_indices(m, 2 * m)) {
      IndexSet h(std::vector<int>(half.begin(), half.end()), 4 * m);
      auto rep = lemma_partition_identity(h, 2 * m);
      r.record(rep.holds, rep.label + " " + rep.detail);
      if (rep.holds) signs.insert(rep.pinned_sign);
    }
    if (signs.size() > 1) r.record(false, "eps differs between partitions");
    if (signs.size() == 1) r.note = "eps = " + std::to_string(*signs.begin());
    out.push_back(r);
  }
  return out;
}

std::vector<CheckResult> suite_span(const VerifyOptions& o) {
  CheckResult rank_r = make("span", "e-family-rank");
  CheckResult dim_r = make("span", "vanishing-space-dim");
  CheckResult incl_r = make("span", "kernel-in-e-span");
  for (int two_n : even_sizes(4, o.two_n_max))
    for (int d = 2; d <= two_n / 2; ++d) {
      const std::string where = "(d,2n)=(" + std::to_string(d) + "," + std::to_string(two_n) + ")";
      const auto expected = static_cast<std::size_t>(binomial(two_n, d - 2));
      rank_r.record(e_span_rank(d, two_n) == expected, where);
      const auto cols = static_cast<std::size_t>(binomial(two_n, d));
      auto rep = vanishing_space(d, two_n, std::max<std::size_t>(static_cast<std::size_t>(o.samples), cols + cols / 2),
                                 o.seed + static_cast<std::uint64_t>(100 * two_n + d));
      dim_r.record(rep.stable && rep.dim == expected, where + " dim=" + std::to_string(rep.dim));
      incl_r.record(in_e_span(d, two_n, rep.kernel), where);
    }
  return {rank_r, dim_r, incl_r};
}

std::vector<CheckResult> suite_counts(const VerifyOptions& o) {
  const std::string S = "counts";
  CheckResult three = make(S, "n-self-codim-pairs-length-gap");
  CheckResult closed = make(S, "n-id-closed-form", Kind::Printed);
  CheckResult mono = make(S, "monotonicity");
  CheckResult lci = make(S, "lci-iff-n-id-equals-n-self");
  for (int two_n : even_sizes(4, o.two_n_max))
    for (int d = 1; d <= two_n / 2; ++d) {
      auto idx = enumerate_indices(d, two_n, true);
      const std::size_t m = idx.size();
      // table[a][b] = N_{idx[a], idx[b]} for idx[a] <= idx[b], else -1
      auto table = parallel_map<std::vector<int>>(m, [&](std::size_t b) {
        std::vector<int> col(m, -1);
        for (std::size_t a = 0; a < m; ++a)
          if (bruhat_leq(idx[a], idx[b])) col[a] = count_nonzero(idx[a], idx[b]);
        return col;
      });
      for (std::size_t b = 0; b < m; ++b) {
        const IndexSet& i = idx[b];
        const int n_self = table[b][b];
        three.record(n_self == codim_pairs(i) && n_self == length_a(i) - length_c(i), i.to_string());
        const int n_id = table[b][0];  // identity is lexicographically first
        if (n_self > 0) closed.record(n_id_closed_form(i) == n_id, i.to_string() + " formula=" +
                                                                       std::to_string(n_id_closed_form(i)) +
                                                                       " brute=" + std::to_string(n_id));
        lci.record(is_lci(i) == (n_id == n_self), i.to_string());
        for (std::size_t jx = 0; jx < m; ++jx) {
          if (table[b][jx] < 0) continue;
          for (std::size_t l = 0; l < m; ++l)
            if (table[b][l] >= 0 && bruhat_leq(idx[l], idx[jx]))
              mono.record(table[b][l] >= table[b][jx], idx[l].to_string() + "<=" + idx[jx].to_string() + "<=" + i.to_string());
        }
      }
    }
  return {three, closed, mono, lci};
}

std::vector<CheckResult> suite_tangent(const VerifyOptions& o) {
  const std::string S = "tangent";
  CheckResult closed = make(S, "codim-closed-vs-direct");
  CheckResult sa = make(S, "smooth-a-pattern-vs-tangent");
  CheckResult sc = make(S, "smooth-c-vs-tangent-equality");
  CheckResult tri = make(S, "smoothness-trichotomy", Kind::Printed);
  CheckResult tri_fixed = make(S, "smoothness-trichotomy-with-r-equals-d");
  CheckResult witness = make(S, "witness-5-6");
  for (int two_n : even_sizes(4, o.two_n_max))
    for (int d = 1; d <= two_n / 2; ++d)
      for (const IndexSet& i : enumerate_indices(d, two_n, true)) {
        const int direct = tangent_codim_c_direct(i);
        closed.record(tangent_codim_c_closed_form(i) == direct, i.to_string());
        sa.record(smooth_a(i) == (tangent_dim_a(i) == length_a(i)), i.to_string());
        sc.record(smooth_c(i) == (tangent_dim_a(i) - direct == length_c(i)), i.to_string());
        if (smooth_a(i) && 1 < d && d < two_n / 2) {
          tri.record(smooth_c(i) == smooth_c_printed_trichotomy(i), i.to_string() + " in 2n=" + std::to_string(two_n));
          tri_fixed.record(smooth_c(i) == smooth_c_corrected_trichotomy(i), i.to_string());
        }
      }
  if (o.two_n_max >= 8) {
    IndexSet w({5, 6}, 8);
    witness.record(smooth_a(w) && !smooth_c(w), "5,6");
  }
  std::vector<CheckResult> out = {closed, sa, sc, tri, tri_fixed};
  if (witness.cases) out.push_back(witness);
  return out;
}

std::vector<CheckResult> suite_flags(const VerifyOptions& o) {
  const std::string S = "flags";
  CheckResult dims_r = make(S, "flag-dims-vs-lift");
  CheckResult printed = make(S, "lci-printed-pattern", Kind::Printed);
  CheckResult pattern = make(S, "lci-pattern-with-rectangle");
  CheckResult sampler = make(S, "sampled-flags");
  for (int n = 2; n <= o.two_n_max / 2; ++n)
    for (const FlagWord& w : flag_enumerate(n, true)) {
      std::vector<int> v(w.values().begin(), w.values().end());
      Dims dm = flag_dims(w);
      dims_r.record(dm.dim_a == flag_dim_a_from_lift(v, 2 * n) && dm.dim_c == flag_dim_c_from_lift(v, 2 * n),
                    w.to_string());
      printed.record(flag_is_lci(w) == flag_lci_printed_pattern(w), w.to_string());
      pattern.record(flag_is_lci(w) == flag_lci_pattern(w), w.to_string());
    }
  if (o.two_n_max >= 6) {
    const int n = 3;
    auto words = flag_enumerate(n, true);
    auto es = e_family(n, 2 * n);
    for (int k = 0; k < o.samples; ++k) {
      const FlagWord& w = words[static_cast<std::size_t>(k) % words.size()];
      FlagMatrix f = sample_flag(w, true, config(o, 900 + static_cast<std::uint64_t>(k)));
      bool ok = true;
      for (int d = 1; d <= n; ++d) ok = ok && !is_zero(plucker(f.prefix(d), w.prefix(static_cast<std::size_t>(d))));
      SubspaceMatrix top = f.prefix(n);
      ok = ok && is_isotropic(top);
      for (const auto& e : es) ok = ok && is_zero(evaluate(e, top));
      sampler.record(ok, "seed " + std::to_string(k) + " w=" + w.to_string());
    }
  }
  std::vector<CheckResult> out = {dims_r, printed, pattern};
  if (sampler.cases) out.push_back(sampler);
  return out;
}

std::vector<CheckResult> suite_schubert(const VerifyOptions& o) {
  const std::string S = "schubert";
  CheckResult zero_a = make(S, "restriction-zero-implies-vanishing-on-a-cell");
  CheckResult nonzero_a = make(S, "restriction-nonzero-seen-on-a-cell");
  CheckResult zero_c = make(S, "e-vanishes-on-c-cell");
  const int seeds = std::max(10, o.samples / 2);
  for (int two_n : even_sizes(4, std::min(o.two_n_max, 8)))
    for (int d = 2; d <= two_n / 2; ++d) {
      auto primes = enumerate_indices(d - 2, two_n);
      std::vector<LinearSection> es;
      for (const auto& ip : primes) es.push_back(build_E(ip, two_n / 2));
      for (const IndexSet& i : enumerate_indices(d, two_n, true)) {
        std::vector<char> seen_nonzero(es.size(), 0);
        bool c_ok = true;
        for (int k = 0; k < seeds; ++k) {
          auto cfg = config(o, 5000 + static_cast<std::uint64_t>(k));
          SubspaceMatrix pa = sample_schubert(i, false, cfg);
          SubspaceMatrix pc = sample_schubert(i, true, cfg);
          for (std::size_t e = 0; e < es.size(); ++e) {
            if (!is_zero(evaluate(es[e], pa))) seen_nonzero[e] = 1;
            if (!is_zero(evaluate(es[e], pc))) c_ok = false;
          }
        }
        for (std::size_t e = 0; e < es.size(); ++e) {
          const std::string where = "i'=" + primes[e].to_string() + " i=" + i.to_string();
          if (restriction_zero(primes[e], i))
            zero_a.record(!seen_nonzero[e], where);
          else
            nonzero_a.record(seen_nonzero[e], where);
        }
        zero_c.record(c_ok, i.to_string());
      }
    }
  return {zero_a, nonzero_a, zero_c};
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
  if (opts.two_n_max < 4 || opts.two_n_max % 2 != 0)
    throw std::invalid_argument("two-n-max must be an even integer >= 4");
  if (opts.samples < 1) throw std::invalid_argument("samples must be positive");
  using Fn = std::vector<CheckResult> (*)(const VerifyOptions&);
  static const std::map<std::string, Fn> table = {
      {"identities", suite_identities}, {"lemma", suite_lemma}, {"span", suite_span},
      {"counts", suite_counts},         {"tangent", suite_tangent}, {"flags", suite_flags},
      {"schubert", suite_schubert}};
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& name : suite_names()) {
      auto part = table.at(name)(opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  auto it = table.find(suite);
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second(opts);
}

}  // namespace spgr

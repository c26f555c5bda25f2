// Acceptance run: one PASS/FAIL line per criterion, indented detail lines
// under it. Exit status is the number of failing criteria (capped at 1 for ctest).
//
// All comparisons are exact; the only tolerances are sample counts and the
// runtime budget of criterion 3, pinned below.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spgr/combinat.hpp"
#include "spgr/equations.hpp"
#include "spgr/parallel.hpp"
#include "spgr/pluecker.hpp"
#include "spgr/sampler.hpp"
#include "spgr/schubert.hpp"

using namespace spgr;

namespace {

constexpr int kIsotropicPoints = 100;      // criterion 5
constexpr int kPairingTrials = 100;        // criterion 7, sampled
constexpr int kLocalTrials = 10;           // criterion 7, per (j', i)
constexpr int kFlagTrials = 25;            // criterion 7, per flag case
constexpr int kFlagSeeds = 1000;           // criterion 8
constexpr int kSchubertSeeds = 50;         // criterion 9
constexpr double kCountsBudgetSeconds = 60.0;  // criterion 3

const std::vector<std::pair<int, int>> kSpanCases = {{2, 4}, {2, 6}, {3, 6}, {2, 8}, {3, 8}, {4, 8}};

struct Part {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;
  void record(bool ok, const std::string& where) {
    ++cases;
    if (!ok && failures++ == 0) first = where;
  }
  bool ok() const { return failures == 0; }
};

int failed_criteria = 0;

void report(int id, const std::string& title, const std::vector<Part>& parts,
            const std::vector<std::string>& info = {}) {
  bool ok = std::all_of(parts.begin(), parts.end(), [](const Part& p) { return p.ok(); });
  if (!ok) ++failed_criteria;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << "\n";
  for (const Part& p : parts) {
    std::cout << "    " << (p.ok() ? "ok  " : "BAD ") << p.name << " cases=" << p.cases;
    if (!p.ok()) std::cout << " failures=" << p.failures << " first: " << p.first;
    std::cout << "\n";
  }
  for (const auto& line : info) std::cout << "    info " << line << "\n";
  std::cout.flush();
}

std::string pair_label(int d, int two_n) {
  return "(d,2n)=(" + std::to_string(d) + "," + std::to_string(two_n) + ")";
}

SampleConfig cfg_for(std::uint64_t salt) {
  SampleConfig c;
  c.seed = mix_seed(0xacce97ULL + salt);
  return c;
}

// Flag dimensions recomputed from the full one-line lifts.
int lift_inversions(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++inv;
  return inv;
}

Dims flag_dims_oracle(const FlagWord& w) {
  const int two_n = w.two_n();
  std::vector<int> head(w.values().begin(), w.values().end());
  std::vector<int> a = head;
  for (int v = 1; v <= two_n; ++v)
    if (std::find(head.begin(), head.end(), v) == head.end()) a.push_back(v);
  std::vector<int> c = head;
  for (auto it = head.rbegin(); it != head.rend(); ++it) c.push_back(two_n + 1 - *it);
  int big = 0;
  for (int v : head)
    if (v > two_n / 2) ++big;
  return {lift_inversions(a), (lift_inversions(c) + big) / 2};
}

void criterion1() {
  Part p{"C(M,1,2) p_{1,2,3} - E_{(3)} == 0 as polynomials"};
  std::vector<std::string> names;
  IndexSet id = IndexSet::identity(3, 8);
  PolyMatrix m = chart_matrix(id, &names);
  MPoly lhs = pairing_generic(m, 1, 2) * plucker_generic(m, id);
  MPoly rhs = evaluate_generic(build_E(IndexSet({3}, 8), 4), m);
  p.record(lhs == rhs, "lhs " + lhs.to_string(names) + " rhs " + rhs.to_string(names));
  report(1, "symbolic pairing identity on the 15-variable chart of (1,2,3) in Gr(3,8)", {p},
         {"variables=" + std::to_string(names.size()) + " E_(3) = " + build_E(IndexSet({3}, 8), 4).to_string()});
}

void criterion2() {
  IndexSet i({1, 3, 7}, 8), id = IndexSet::identity(3, 8);
  Part dims_p{"dim X^A = 5, dim X^C = 4"};
  Dims dm = dims(i);
  dims_p.record(dm.dim_a == 5 && dm.dim_c == 4,
                "got (" + std::to_string(dm.dim_a) + "," + std::to_string(dm.dim_c) + ")");
  Part self_p{"N_{i,i} = 1"};
  self_p.record(count_nonzero(i, i) == 1, std::to_string(count_nonzero(i, i)));
  Part id_p{"N_{id,i} = 1 by brute force"};
  const int n_id = count_nonzero(id, i);
  id_p.record(n_id == 1, std::to_string(n_id));
  Part cf_p{"closed form for N_{id,i} = 1"};
  cf_p.record(n_id_closed_form(i) == 1, std::to_string(n_id_closed_form(i)));
  report(2, "worked values for i = (1,3,7) in 2n = 8", {dims_p, self_p, id_p, cf_p},
         {"printed N_{(1,2,3),(1,3,7)} = 2 disagrees with brute force " + std::to_string(n_id) +
          "; logged as an erratum"});
}

void criterion3() {
  auto start = std::chrono::steady_clock::now();
  Part three{"N_{i,i} = codim_pairs = length_a - length_c"};
  Part closed{"closed form = N_{id,i} when N_{i,i} > 0"};
  Part mono{"N_{l,i} >= N_{j,i} for l <= j <= i"};
  Part lci{"is_lci <=> N_id = N_self"};
  for (int two_n = 4; two_n <= 10; two_n += 2)
    for (int d = 1; d <= two_n / 2; ++d) {
      auto idx = enumerate_indices(d, two_n, true);
      const std::size_t m = idx.size();
      std::vector<std::vector<char>> leq(m, std::vector<char>(m));
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) leq[a][b] = bruhat_leq(idx[a], idx[b]);
      auto table = parallel_map<std::vector<int>>(m, [&](std::size_t b) {
        std::vector<int> col(m, -1);
        for (std::size_t a = 0; a < m; ++a)
          if (leq[a][b]) col[a] = count_nonzero(idx[a], idx[b]);
        return col;
      });
      const IndexSet id = IndexSet::identity(d, two_n);
      for (std::size_t b = 0; b < m; ++b) {
        const IndexSet& i = idx[b];
        const int n_self = table[b][b];
        const int n_id = count_nonzero(id, i);
        three.record(n_self == codim_pairs(i) && n_self == length_a(i) - length_c(i), i.to_string());
        if (n_self > 0) {
          const int f = n_id_closed_form(i);
          closed.record(f == n_id, "i=(" + i.to_string() + ") 2n=" + std::to_string(two_n) +
                                       " formula=" + std::to_string(f) + " brute=" + std::to_string(n_id));
        }
        lci.record(is_lci(i) == (n_id == n_self), i.to_string());
        for (std::size_t j = 0; j < m; ++j) {
          if (!leq[j][b]) continue;
          for (std::size_t l = 0; l < m; ++l)
            if (leq[l][j])
              mono.record(table[b][l] >= table[b][j],
                          idx[l].to_string() + " <= " + idx[j].to_string() + " <= " + i.to_string());
        }
      }
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Part budget{"runtime <= 60 s"};
  budget.record(secs <= kCountsBudgetSeconds, std::to_string(secs) + " s");
  report(3, "exhaustive count consistency, 2n in {4,6,8,10}", {three, closed, mono, lci, budget},
         {"elapsed " + std::to_string(secs) + " s"});
}

void criterion4() {
  Part closed{"tangent codim closed form = exact rank"};
  Part sa{"smooth_a pattern <=> tangent_dim_a = length_a"};
  Part sc{"smooth_c <=> tangent dimension = length_c"};
  Part tri{"printed trichotomy on smooth_a, 1 < d < n"};
  Part tri_fixed{"trichotomy with r = d added (informational)"};
  for (int two_n = 4; two_n <= 10; two_n += 2)
    for (int d = 1; d <= two_n / 2; ++d)
      for (const IndexSet& i : enumerate_indices(d, two_n, true)) {
        const std::string where = "i=(" + i.to_string() + ") 2n=" + std::to_string(two_n);
        const int direct = tangent_codim_c_direct(i);
        closed.record(tangent_codim_c_closed_form(i) == direct, where);
        sa.record(smooth_a(i) == (tangent_dim_a(i) == length_a(i)), where);
        sc.record(smooth_c(i) == (tangent_dim_a(i) - direct == length_c(i)), where);
        if (smooth_a(i) && 1 < d && d < two_n / 2) {
          tri.record(smooth_c(i) == smooth_c_printed_trichotomy(i), where);
          tri_fixed.record(smooth_c(i) == smooth_c_corrected_trichotomy(i), where);
        }
      }
  Part witness{"(5,6) in Gr(2,8): smooth_a, not smooth_c"};
  IndexSet w({5, 6}, 8);
  witness.record(smooth_a(w) && !smooth_c(w), "5,6");
  std::vector<std::string> info = {"corrected trichotomy: " + std::string(tri_fixed.ok() ? "holds" : "fails") +
                                   " on " + std::to_string(tri_fixed.cases) + " cases"};
  report(4, "exhaustive tangent and smoothness consistency, 2n in {4,6,8,10}", {closed, sa, sc, tri, witness}, info);
}

void criterion5() {
  Part audit{"samples are isotropic of full rank"};
  Part vanish{"every E_{i'} is exactly 0"};
  for (auto [d, two_n] : kSpanCases) {
    auto es = e_family(d, two_n);
    auto bad = parallel_map<int>(kIsotropicPoints, [&](std::size_t k) {
      SubspaceMatrix v = sample_isotropic(d, two_n, cfg_for(1000 * two_n + 100 * d + k));
      if (!is_isotropic(v) || rank(v.mat()) != static_cast<std::size_t>(d)) return -1;
      for (std::size_t e = 0; e < es.size(); ++e)
        if (!is_zero(evaluate(es[e], v))) return static_cast<int>(e) + 1;
      return 0;
    });
    for (std::size_t k = 0; k < bad.size(); ++k) {
      const std::string where = pair_label(d, two_n) + " sample " + std::to_string(k);
      audit.record(bad[k] >= 0, where);
      vanish.record(bad[k] == 0 || bad[k] < 0, where);
    }
  }
  report(5, "E_{i'} vanish on 100 isotropic points per (d,2n)", {audit, vanish});
}

void criterion6() {
  Part rank_p{"rank of the E family = C(2n, d-2)"};
  Part dim_p{"vanishing space dimension = C(2n, d-2), stable"};
  Part incl_p{"sampled kernel inside the E span"};
  std::vector<std::string> info;
  for (auto [d, two_n] : kSpanCases) {
    const auto expected = static_cast<std::size_t>(binomial(two_n, d - 2));
    const auto cols = static_cast<std::size_t>(binomial(two_n, d));
    const std::string where = pair_label(d, two_n);
    const std::size_t r = e_span_rank(d, two_n);
    rank_p.record(r == expected, where + " rank=" + std::to_string(r));
    auto rep = vanishing_space(d, two_n, std::max<std::size_t>(100, cols + cols / 2), 77 + 10 * two_n + d);
    dim_p.record(rep.stable && rep.dim == expected, where + " dim=" + std::to_string(rep.dim));
    incl_p.record(in_e_span(d, two_n, rep.kernel), where);
    info.push_back(where + " C=" + std::to_string(expected) + " rank=" + std::to_string(r) +
                   " kernel=" + std::to_string(rep.dim) + " points=" + std::to_string(rep.points));
  }
  report(6, "degree-1 vanishing space equals the span of the E family", {rank_p, dim_p, incl_p}, info);
}

void criterion7() {
  std::size_t vacuous = 0;
  auto pairing_part = [&vacuous](Mode mode, int d_max, int two_n_max, int trials, const std::string& name) {
    Part p{name};
    for (int two_n = 4; two_n <= two_n_max; two_n += 2)
      for (int d = 2; d <= std::min(d_max, two_n); ++d) {
        auto idx = enumerate_indices(d, two_n);
        auto reps = parallel_map<std::vector<SignedIdentityReport>>(idx.size(), [&](std::size_t k) {
          return check_pairing_identities(idx[k], mode, trials, cfg_for(31 * k + two_n));
        });
        for (std::size_t k = 0; k < reps.size(); ++k) {
          const IndexSet& i = idx[k];
          int s = 1, t = 2;
          for (const auto& rep : reps[k]) {
            const int expected = (s + t + 1) % 2 == 0 ? 1 : -1;
            const bool enough = mode == Mode::Symbolic || rep.trials >= static_cast<std::size_t>(kPairingTrials);
            bool ok = rep.holds && rep.pinned_sign == expected && enough;
            // 0 = eps * 0: the section is the zero section (only possible for d > n);
            // confirm the pairing side vanishes identically on the chart
            if (!ok && rep.holds && rep.pinned_sign == 0 &&
                build_E(i.without({i[s - 1], i[t - 1]}), two_n / 2).is_zero() &&
                check_pairing_identity(i, s, t, Mode::Symbolic).holds) {
              ok = true;
              ++vacuous;
            }
            p.record(ok,
                     rep.label + " (s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ") " + rep.detail);
            if (++t > d) t = ++s + 1;
          }
        }
      }
    return p;
  };
  Part sym = pairing_part(Mode::Symbolic, 3, 8, 1, "pairing identity, eps = (-1)^(s+t+1), symbolic d<=3, 2n<=8");
  Part smp = pairing_part(Mode::Sampled, 5, 10, kPairingTrials,
                          "pairing identity, eps = (-1)^(s+t+1), sampled d<=5, 2n<=10");

  Part local{"local relation with one pinned sign per case"};
  std::set<int> local_signs;
  for (int two_n = 4; two_n <= 8; two_n += 2)
    for (int d = 2; d <= two_n / 2; ++d) {
      std::vector<std::pair<IndexSet, IndexSet>> cases;
      for (const auto& i : enumerate_indices(d, two_n))
        for (const auto& jp : enumerate_indices(d - 2, two_n)) cases.emplace_back(jp, i);
      auto reps = parallel_map<SignedIdentityReport>(cases.size(), [&](std::size_t k) {
        return check_local_relation(cases[k].first, cases[k].second, Mode::Sampled, kLocalTrials,
                                    cfg_for(50000 + k));
      });
      for (const auto& rep : reps) {
        local.record(rep.holds, rep.label + " " + rep.detail);
        if (rep.pinned_sign) local_signs.insert(rep.pinned_sign);
      }
    }

  Part flag{"flag relation, single pair with one pinned sign"};
  Part expansion{"flag relation, three-term expansion (informational)"};
  for (int n = 2; n <= 3; ++n)
    for (const FlagWord& w : flag_enumerate(n, false))
      for (int d1 = 2; d1 <= n; ++d1)
        for (int s = 1; s <= d1; ++s)
          for (int t = s + 1; t <= d1; ++t) {
            for (int d2 = d1 + 1; d2 <= n; ++d2) {
              auto rep = check_flag_relation(w, d1, d2, s, t, kFlagTrials, cfg_for(61));
              flag.record(rep.holds, rep.label);
            }
            if (d1 < n) {
              auto rep = check_flag_expansion(w, d1, s, t, kFlagTrials, cfg_for(67));
              expansion.record(rep.holds, rep.label + " " + rep.detail);
            }
          }

  Part lemma{"partition lemma, one eps per m in {1,2,3}"};
  std::vector<std::string> info;
  for (int m = 1; m <= 3; ++m) {
    std::set<int> signs;
    for (const IndexSet& half : enumerate_indices(m, 2 * m)) {
      IndexSet h(std::vector<int>(half.begin(), half.end()), 4 * m);
      auto rep = lemma_partition_identity(h, 2 * m);
      lemma.record(rep.holds, rep.label + " " + rep.detail);
      if (rep.holds) signs.insert(rep.pinned_sign);
    }
    lemma.record(signs.size() == 1, "m=" + std::to_string(m) + " has " + std::to_string(signs.size()) + " signs");
    if (signs.size() == 1) info.push_back("lemma m=" + std::to_string(m) + " eps=" + std::to_string(*signs.begin()));
  }
  std::string ls;
  for (int v : local_signs) ls += (ls.empty() ? "" : ",") + std::to_string(v);
  info.push_back("local relation pinned eps in {" + ls + "}");
  info.push_back("pairing cases with zero section on both sides (d > n, sign vacuous): " + std::to_string(vacuous));
  info.push_back("three-term flag expansion: " + std::string(expansion.ok() ? "holds" : "fails") + " on " +
                 std::to_string(expansion.cases) + " cases");
  report(7, "sign ledger", {sym, smp, local, flag, lemma}, info);
}

void criterion8() {
  Part dims_p{"flag_dims = lift recomputation on all symplectic words"};
  Part lci_p{"flag_is_lci = printed prefix pattern"};
  Part lci_fixed{"flag_is_lci = printed pattern or rectangle (informational)"};
  for (int n = 2; n <= 4; ++n)
    for (const FlagWord& w : flag_enumerate(n, true)) {
      dims_p.record(flag_dims(w) == flag_dims_oracle(w), w.to_string());
      lci_p.record(flag_is_lci(w) == flag_lci_printed_pattern(w),
                   "w=(" + w.to_string() + ") w^(n)=(" + w.prefix(w.size()).to_string() + ")");
      lci_fixed.record(flag_is_lci(w) == flag_lci_pattern(w), w.to_string());
    }

  Part chart{"sampled flags: chart shape and nonzero prefix minors"};
  Part iso{"sampled flags: isotropic, every E_{i'} vanishes on each prefix"};
  const int n = 3, two_n = 6;
  auto words = flag_enumerate(n, true);
  std::map<int, std::vector<LinearSection>> es;
  for (int d = 2; d <= n; ++d) es[d] = e_family(d, two_n);
  auto verdicts = parallel_map<std::pair<std::string, std::string>>(
      static_cast<std::size_t>(kFlagSeeds), [&](std::size_t k) {
        std::string chart_bad, iso_bad;
        for (const FlagWord& w : words) {
          FlagMatrix f = sample_flag(w, true, cfg_for(800000 + k * 64 + (&w - words.data())));
          const RatMatrix& m = f.mat();
          bool shape = true;
          for (int t = 1; t <= n; ++t) {
            const int wt = w[static_cast<std::size_t>(t - 1)];
            shape = shape && m.at1(wt, t) == 1;
            for (int a = wt + 1; a <= two_n; ++a) shape = shape && is_zero(m.at1(a, t));
            for (int u = 1; u < t; ++u) shape = shape && is_zero(m.at1(w[static_cast<std::size_t>(u - 1)], t));
            shape = shape && !is_zero(plucker(f.prefix(t), w.prefix(static_cast<std::size_t>(t))));
          }
          bool ok = is_isotropic(f.prefix(n));
          for (int d = 2; d <= n && ok; ++d)
            for (const auto& e : es[d]) ok = ok && is_zero(evaluate(e, f.prefix(d)));
          if (!shape && chart_bad.empty()) chart_bad = w.to_string();
          if (!ok && iso_bad.empty()) iso_bad = w.to_string();
        }
        return std::make_pair(chart_bad, iso_bad);
      });
  for (std::size_t k = 0; k < verdicts.size(); ++k) {
    chart.record(verdicts[k].first.empty(), "seed " + std::to_string(k) + " w=" + verdicts[k].first);
    iso.record(verdicts[k].second.empty(), "seed " + std::to_string(k) + " w=" + verdicts[k].second);
  }
  std::vector<std::string> info = {
      "rectangle-corrected lci pattern: " + std::string(lci_fixed.ok() ? "agrees" : "disagrees") + " on " +
          std::to_string(lci_fixed.cases) + " words",
      std::to_string(words.size()) + " words x " + std::to_string(kFlagSeeds) + " seeds at n=3"};
  report(8, "flag layer", {dims_p, lci_p, chart, iso}, info);
}

void criterion9() {
  Part zero_a{"restriction_zero => E_{i'} = 0 on every type-A cell sample"};
  Part nonzero_a{"not restriction_zero => some type-A cell sample gives E_{i'} != 0"};
  Part zero_c{"E_{i'} = 0 on every type-C cell sample"};
  for (int two_n = 4; two_n <= 8; two_n += 2)
    for (int d = 2; d <= two_n / 2; ++d) {
      auto primes = enumerate_indices(d - 2, two_n);
      std::vector<LinearSection> es;
      for (const auto& ip : primes) es.push_back(build_E(ip, two_n / 2));
      auto idx = enumerate_indices(d, two_n);
      struct Out {
        std::vector<char> seen;
        bool c_ok = true;
      };
      auto outs = parallel_map<Out>(idx.size(), [&](std::size_t x) {
        const IndexSet& i = idx[x];
        const bool symp = is_symplectic(i);
        Out o{std::vector<char>(es.size(), 0), true};
        for (int k = 0; k < kSchubertSeeds; ++k) {
          SampleConfig c = cfg_for(9000000 + 1000 * x + k + 100000 * two_n);
          SubspaceMatrix pa = sample_schubert(i, false, c);
          for (std::size_t e = 0; e < es.size(); ++e)
            if (!is_zero(evaluate(es[e], pa))) o.seen[e] = 1;
          if (symp) {
            SubspaceMatrix pc = sample_schubert(i, true, c);
            for (const auto& e : es) o.c_ok = o.c_ok && is_zero(evaluate(e, pc));
          }
        }
        return o;
      });
      for (std::size_t x = 0; x < idx.size(); ++x) {
        for (std::size_t e = 0; e < es.size(); ++e) {
          const std::string where = "i'=(" + primes[e].to_string() + ") i=(" + idx[x].to_string() + ")";
          if (restriction_zero(primes[e], idx[x]))
            zero_a.record(!outs[x].seen[e], where);
          else
            nonzero_a.record(outs[x].seen[e], where);
        }
        if (is_symplectic(idx[x])) zero_c.record(outs[x].c_ok, idx[x].to_string());
      }
    }
  report(9, "set-theoretic substitute: restriction_zero matches cell samples, 2n <= 8, 50 seeds",
         {zero_a, nonzero_a, zero_c},
         {"the all-degrees ideal equality is not checked; criteria 5 and 6 cover degree 1"});
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  void (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                          criterion6, criterion7, criterion8, criterion9};
  for (auto fn : criteria) {
    const auto t = clock::now();
    fn();
    std::cout << "    time " << std::chrono::duration<double>(clock::now() - t).count() << " s\n";
  }
  std::cout << "SUMMARY " << (9 - failed_criteria) << "/9 criteria pass, total "
            << std::chrono::duration<double>(clock::now() - t0).count() << " s\n";
  return failed_criteria == 0 ? 0 : 1;
}

#pragma once

// The sections E_{i'}, their restriction to Schubert varieties, and exact
// checks of the identities relating them to the symplectic pairing.

#include <cstdint>
#include <string>
#include <vector>

#include "spgr/combinat.hpp"
#include "spgr/matrix.hpp"
#include "spgr/mpoly.hpp"
#include "spgr/pluecker.hpp"
#include "spgr/sampler.hpp"

namespace spgr {

/// E_{i'} = sum over t <= n with {t, 2n+1-t} disjoint from i' of
/// (-1)^{inv(i', t, 2n+1-t)} p_{i' + {t, 2n+1-t}}. Lives on Gr(|i'|+2, 2n).
LinearSection build_E(const IndexSet& i_prime, int n);

/// {E_{i'} : i' in I_{d-2,2n}} in lexicographic order of i'; empty for d < 2.
std::vector<LinearSection> e_family(int d, int two_n);

/// Rows = i' in I_{d-2,2n}, columns = I_{d,2n}, both lexicographic.
RatMatrix e_coefficient_matrix(int d, int two_n);
std::size_t e_span_rank(int d, int two_n);

/// True iff E_{i'} restricts to zero on X^A(i): no surviving term
/// i' + {t, 2n+1-t} lies below i.
bool restriction_zero(const IndexSet& i_prime, const IndexSet& i);

/// Drops every term whose index is not below i.
LinearSection restrict(const LinearSection& sec, const IndexSet& i);

enum class Mode { Symbolic, Sampled };
std::string to_string(Mode m);

struct SignedIdentityReport {
  bool holds = false;
  int pinned_sign = 0;  // 0 until some trial fixes it
  std::size_t trials = 0;
  std::size_t informative_trials = 0;  // trials where both sides were nonzero
  Mode mode = Mode::Sampled;
  std::string label;
  std::string detail;  // counterexample, or the matched pair for flags
  int matched_s = 0;
  int matched_t = 0;
};

/// i-standard chart of Gr(d,2n): rows i are the identity, the other entries
/// are variables x_{a,c} numbered row-major. names receives "x_{a,c}".
PolyMatrix chart_matrix(const IndexSet& i, std::vector<std::string>* names = nullptr);

/// Random i-standard matrix with integer entries in [-bound, bound].
SubspaceMatrix random_standard(const IndexSet& i, Rng& rng, long long bound);

/// C(M,s,t) * p_i = eps * E_{i \ {i_s, i_t}} with M i-standard; s < t one-based.
SignedIdentityReport check_pairing_identity(const IndexSet& i, int s, int t, Mode mode,
                                            int trials = 100, const SampleConfig& cfg = {});

/// Every pair (s,t) of i at once; sampled mode reuses one matrix per trial
/// across all pairs. Reports are ordered (1,2), (1,3), ..., (d-1,d).
std::vector<SignedIdentityReport> check_pairing_identities(const IndexSet& i, Mode mode,
                                                           int trials = 100,
                                                           const SampleConfig& cfg = {});

/// E_{j'} p_i = eps * sum_{k<l} (-1)^{k+l+inv(j', i_k, i_l)} E_{i\{i_k,i_l}} p_{j' + {i_k,i_l}}.
SignedIdentityReport check_local_relation(const IndexSet& j_prime, const IndexSet& i,
                                          Mode mode, int trials = 100,
                                          const SampleConfig& cfg = {});

/// The single-pair relation E_{i\{i_s,i_t}}/p_i = +-E_{j\{j_s',j_t'}}/p_j with
/// i = w^(d1), j = w^(d2), at sampled points of O_w. Searches every (s', t', sign)
/// for one that holds at all trials; the pair given by the positions of i_s, i_t
/// in j is preferred when several match.
SignedIdentityReport check_flag_relation(const FlagWord& w, int d1, int d2, int s, int t,
                                         int trials = 50, const SampleConfig& cfg = {});

/// The exact relation for d2 = d1 + 1, a = w_{d1+1}:
/// C_i(s,t) = C_j(s',t') + alpha_t C_j(s',a') + alpha_s C_j(a',t'), where
/// C_x(u,v) = (-1)^{u+v+1} E_{x\{x_u,x_v}}/p_x, primes are positions in j and
/// alpha_k is the row-a entry of column k of the i-standard presentation.
SignedIdentityReport check_flag_expansion(const FlagWord& w, int d1, int s, int t,
                                          int trials = 50, const SampleConfig& cfg = {});

/// (-1)^{m-1} p_i + p_j = eps * sum_a sum_l (-1)^a / (m C(m-1,a)) E_l for n = 2m,
/// i built from `half` and j from its complement (each closed under k -> 2n+1-k),
/// l running over mirrored-pair sets of size n-2 with #(l cap j) = 2a.
SignedIdentityReport lemma_partition_identity(const IndexSet& half, int n);

struct VanishingReport {
  std::size_t dim = 0;
  bool stable = false;
  std::size_t points = 0;
  std::vector<RatVector> kernel;  // over I_{d,2n}, lexicographic
};

/// Kernel of the evaluation matrix on n_points isotropic samples, rechecked
/// with 25% more points.
VanishingReport vanishing_space(int d, int two_n, std::size_t n_points, std::uint64_t seed);
/// Throws std::runtime_error if the dimension is not stable.
std::size_t vanishing_space_dim(int d, int two_n, std::size_t n_points, std::uint64_t seed);

/// Stacked-rank test: every vector lies in the row space of the E coefficients.
bool in_e_span(int d, int two_n, const std::vector<RatVector>& vectors);

}  // namespace spgr

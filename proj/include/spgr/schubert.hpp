#pragma once

// Counts of surviving local equations, complete-intersection criteria,
// tangent spaces at e_id and smoothness of Schubert varieties.

#include <optional>
#include <string>
#include <vector>

#include "spgr/combinat.hpp"

namespace spgr {

/// N_{j,i}: pairs s < t with E_{j\{j_s,j_t}} nonzero on X^A(i). Needs j <= i, both symplectic.
int count_nonzero(const IndexSet& j, const IndexSet& i);

/// #{s < t : i_s + i_t > 2n}.
int codim_pairs(const IndexSet& i);

/// min{a : i_a >= a + offset}, one-based; nullopt if no such a.
std::optional<int> first_jump(const IndexSet& i, int offset);

struct ShapeParams {
  std::optional<int> r1;  // first a with i_a >= a+1; also the r of the tangent formula
  std::optional<int> r2;  // first a with i_a >= a+2; nullopt stands for infinity
  int q = 0;              // 2n+1-i_d
};
ShapeParams shape_params(const IndexSet& i);

/// C(d-r1+1, 2) - (min{r2, q} - r1). Throws std::domain_error when N_{i,i} = 0.
int n_id_closed_form(const IndexSet& i);

/// i_s + i_t > 2n for all r1 <= s < t <= d; true when N_{i,i} = 0.
bool is_lci(const IndexSet& i);

/// is_lci on w^(n).
bool flag_is_lci(const FlagWord& w);
/// w^(n) = (1..r1-1, n, n+2, ..., 2n+1-r1), r1 = min{a <= n : a not in w}; true if no such a.
bool flag_lci_printed_pattern(const FlagWord& w);
/// The printed pattern or the rectangle (1..r1-1, n+1, ..., 2n+1-r1).
bool flag_lci_pattern(const FlagWord& w);

/// Free chart coordinates x_{a,s} of X^A(i) at e_id.
int tangent_dim_a(const IndexSet& i);

struct TangentCodim {
  int rank = 0;           // exact rank of the restricted hyperplane system
  int touching_pairs = 0;  // pairs with at least one free variable
};
TangentCodim tangent_codim_c_system(const IndexSet& i);
int tangent_codim_c_direct(const IndexSet& i);
/// (d-q+1)(d+q-2r)/2 if q <= d else 0; 0 for i = (1..d).
int tangent_codim_c_closed_form(const IndexSet& i);

/// i = (1, ..., r-1, t, t+1, ..., t+d-r).
bool smooth_a(const IndexSet& i);
bool smooth_c(const IndexSet& i);

/// q > n, q = r or q = r+1.
bool smooth_c_printed_trichotomy(const IndexSet& i);
/// The trichotomy, or r = d.
bool smooth_c_corrected_trichotomy(const IndexSet& i);

struct ClassificationRecord {
  IndexSet index;
  int dim_a = 0, dim_c = 0;
  int n_self = 0, n_id = 0;
  ShapeParams params;
  bool lci = false;
  int tangent_dim_a = 0, tangent_codim_c = 0;
  bool smooth_a = false, smooth_c = false;
};

struct ClassifyOptions {
  /// Assert n_id_closed_form = N_id whenever N_{i,i} > 0.
  bool check_n_id_closed_form = true;
};

ClassificationRecord classify_one(const IndexSet& i, const ClassifyOptions& opts = {});
/// One record per symplectic i, lexicographic. Throws std::runtime_error naming
/// the first index whose cross-checks fail.
std::vector<ClassificationRecord> classify(int d, int two_n, const ClassifyOptions& opts = {});

std::string csv_header();
std::string to_csv(const ClassificationRecord& r);

}  // namespace spgr

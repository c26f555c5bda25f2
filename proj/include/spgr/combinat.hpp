#pragma once

// Index sets, flag words and the Weyl-group combinatorics attached to them:
// Bruhat order, one-line lifts into S_2n, type A/C lengths and the
// dimension formulas for Schubert varieties.

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spgr {

/// A strictly increasing subset of {1, ..., two_n}. The ambient size is part
/// of the value so that sets living in different Grassmannians never compare.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::vector<int> entries, int two_n);

  /// (1, 2, ..., d) inside {1..two_n}.
  static IndexSet identity(int d, int two_n);
  /// Parses "1,3,7"; the empty string is the empty set.
  static IndexSet parse(std::string_view text, int two_n);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int two_n() const { return two_n_; }
  int n() const { return two_n_ / 2; }

  /// Zero-based access; entry k is i_{k+1}.
  int operator[](std::size_t k) const { return entries_[k]; }
  std::span<const int> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool contains(int value) const;
  /// Position (zero-based) of value, or nullopt.
  std::optional<std::size_t> position(int value) const;

  /// Removes the given values (each must be present).
  IndexSet without(std::initializer_list<int> values) const;
  /// Adds the given values; returns nullopt if any is already present.
  std::optional<IndexSet> with(std::initializer_list<int> values) const;

  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend std::strong_ordering operator<=>(const IndexSet& a,
                                          const IndexSet& b);

 private:
  std::vector<int> entries_;
  int two_n_ = 0;
};

/// One-line notation of a permutation of {1..size}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);

  std::size_t size() const { return one_line_.size(); }
  std::span<const int> one_line() const { return one_line_; }
  int operator[](std::size_t k) const { return one_line_[k]; }
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

/// An ordered sequence of n distinct values in {1..2n}: a coset of the
/// partial flag variety Fl_2n(1..n).
class FlagWord {
 public:
  FlagWord(std::vector<int> values, int two_n);
  static FlagWord parse(std::string_view text, int two_n);

  std::size_t size() const { return values_.size(); }
  int two_n() const { return two_n_; }
  int n() const { return two_n_ / 2; }
  int operator[](std::size_t k) const { return values_[k]; }
  std::span<const int> values() const { return values_; }

  /// Sorted set of the first d values, w^(d).
  IndexSet prefix(std::size_t d) const;
  /// No two values sum to 2n+1.
  bool is_symplectic() const;
  std::string to_string() const;

  friend bool operator==(const FlagWord&, const FlagWord&) = default;
  friend auto operator<=>(const FlagWord&, const FlagWord&) = default;

 private:
  std::vector<int> values_;
  int two_n_ = 0;
};

std::size_t inversions(std::span<const int> seq);

bool is_symplectic(const IndexSet& i);

/// Componentwise order a_t <= b_t. Throws on size or ambient mismatch.
bool bruhat_leq(const IndexSet& a, const IndexSet& b);

/// All d-subsets of {1..two_n} in lexicographic order, optionally restricted
/// to symplectic sets and to sets below a bound.
std::vector<IndexSet> enumerate_indices(
    int d, int two_n, bool symplectic_only = false,
    const std::optional<IndexSet>& below = std::nullopt);

Permutation lift_a(const IndexSet& i);
Permutation lift_c(const IndexSet& i);

int length_a(const IndexSet& i);
int length_c(const IndexSet& i);

struct Dims {
  int dim_a = 0;
  int dim_c = 0;
  friend bool operator==(const Dims&, const Dims&) = default;
};

Dims dims(const IndexSet& i);

int flag_dim_a(const FlagWord& w);
/// Requires a symplectic word.
Dims flag_dims(const FlagWord& w);

/// All words of length n over {1..2n} with distinct entries, lexicographic.
std::vector<FlagWord> flag_enumerate(int n, bool symplectic_only);
bool flag_bruhat_leq(const FlagWord& u, const FlagWord& w);

/// Binomial coefficient for small arguments; zero outside 0 <= k <= n.
long long binomial(long long n, long long k);

}  // namespace spgr

#pragma once

// Exact rationals. GMP's mpq_class keeps values canonical (lowest terms,
// positive denominator) after every operation we use.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spgr {

using Rat = mpq_class;
using Int = mpz_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rat& x);

/// Accepts "p", "-p", "p/q", "+p/q". Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

}  // namespace spgr

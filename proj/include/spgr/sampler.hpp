#pragma once

// Exact random points on Gr^C(d,2n), on Schubert cells and on flag charts.

#include <cstdint>

#include "spgr/combinat.hpp"
#include "spgr/pluecker.hpp"

namespace spgr {

struct SampleConfig {
  std::uint64_t seed = 1;
  long long coefficient_bound = 10;
  int max_resamples = 64;

  /// The k-th independent stream derived from this one.
  SampleConfig draw(std::uint64_t k) const;
};

/// Random full-rank isotropic 2n x d matrix.
SubspaceMatrix sample_isotropic(int d, int two_n, const SampleConfig& cfg);

/// Random point of the cell of i: column t has 1 in row i_t and is zero below it.
/// With symplectic = true the point is also isotropic.
SubspaceMatrix sample_schubert(const IndexSet& i, bool symplectic, const SampleConfig& cfg);

/// Random point of the chart O_w: column t = e_{w_t} + sum x_a e_a over a < w_t
/// not among w_1..w_{t-1}. With symplectic = true the flag is isotropic.
FlagMatrix sample_flag(const FlagWord& w, bool symplectic, const SampleConfig& cfg);

/// Row vector r with r . x = C(c, x) for the fixed column c.
RatVector pairing_row(const RatVector& c);

}  // namespace spgr

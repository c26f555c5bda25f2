#pragma once

// Exhaustive and sampled verification suites shipped with the CLI.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace spgr {

struct VerifyOptions {
  int two_n_max = 8;
  std::uint64_t seed = 1;
  int samples = 100;
};

struct CheckResult {
  enum class Kind {
    Check,    // a statement the library stands behind
    Printed,  // a statement as printed that is known to have counterexamples
  };
  std::string suite;
  std::string name;
  Kind kind = Kind::Check;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string counterexample;  // first failing case
  std::string note;            // pinned signs and similar facts

  /// PASS, FAIL, or ERRATUM for a failing printed statement.
  std::string status() const;
  void record(bool ok, const std::string& where);
};

const std::vector<std::string>& suite_names();

/// suite is one of suite_names() or "all".
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);

std::string to_text(const CheckResult& r);
nlohmann::json to_json(const CheckResult& r);

/// Flag dimensions from the full lifts (w, rest) in S_2n and (w, mirror) in the
/// signed permutations; used as the oracle for flag_dims.
int flag_dim_a_from_lift(const std::vector<int>& w, int two_n);
int flag_dim_c_from_lift(const std::vector<int>& w, int two_n);

}  // namespace spgr

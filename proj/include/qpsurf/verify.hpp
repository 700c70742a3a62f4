#pragma once

// Property suites behind `qpsurf verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace qpsurf {

struct SuiteResult {
  std::string name;
  std::vector<std::string> lines;  // one per case, prefixed "ok", "FAIL" or "expected-mismatch"
  int cases = 0;
  int failures = 0;
  bool ok() const { return failures == 0; }
};

/// Counting identities and cycle census over g in [1,3], d in [1,4], m in [1,4].
SuiteResult verify_counts();
/// Rank-1 flips of every flippable edge of the (1,1) and (1,2) standard triangulations.
SuiteResult verify_flips();
/// Canonical factorization vs Garside element for n in [2,6].
SuiteResult verify_garside();
/// Random diagonal gauges: normalize round trip and projection equivariance; strong genericity cases.
SuiteResult verify_gauge(std::uint64_t seed, int samples = 100);
/// Disc parity against the background cycle for m in [1,4] on (1,1) and (1,2).
SuiteResult verify_parity(std::uint64_t seed, int samples_per_point = 10);

const std::vector<std::string>& suite_names();
/// "all" runs every suite in suite_names() order. Throws std::invalid_argument on unknown names.
std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed);

}  // namespace qpsurf

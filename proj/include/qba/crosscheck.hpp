#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qba {

struct CrosscheckConfig {
  unsigned max_n = 3;
  unsigned samples = 20;
  std::uint64_t seed = 1;
};

struct CheckOutcome {
  std::string name;
  unsigned passed = 0;
  unsigned failed = 0;
};

struct CrosscheckReport {
  std::vector<CheckOutcome> checks;
  bool all_passed() const;
  unsigned total_passed() const;
  unsigned total_failed() const;
};

/// Runs the invariant battery for every n in [1, max_n]: every symbolic
/// formula is compared against the generator-matrix oracle. Deterministic in `seed`.
CrosscheckReport run_crosscheck(const CrosscheckConfig& config);

std::string format_report(const CrosscheckReport& report);

}  // namespace qba

#ifndef WOW_VERIFY_HPP
#define WOW_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wow/json_io.hpp"

namespace wow {

struct VerifyConfig {
  std::uint64_t seed = 0;
  int cases = 100;
  int threads = 1;
  double tol = 0;  // 0 -> per-invariant defaults
};

struct SuiteResult {
  std::string suite;
  int cases = 0;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> messages;  // first few failure descriptions
  bool passed() const { return failures == 0; }
  json to_json_summary() const;
};

/// Registered suite names, in reporting order.
std::vector<std::string> suite_names();

/// Run one randomized property suite; throws on unknown name.
SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg);

// --- random instance generators (shared with tests) ------------------------

DiscreteMeasure random_measure(std::uint64_t seed, int dim, int max_atoms);
DiscreteMeasure random_rational_measure(std::uint64_t seed, int dim, int denom,
                                        int max_atoms);
DiscreteMeasure random_uniform_1d_measure(std::uint64_t seed, int atoms);
RandomLaw random_law(std::uint64_t seed, int dim, int max_law_atoms,
                     int max_measure_atoms);

}  // namespace wow

#endif

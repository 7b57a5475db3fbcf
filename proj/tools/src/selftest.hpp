#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "random_gen.hpp"

namespace conetop::selftest {

struct SuiteResult {
  std::string name;
  int instances = 0;
  int failures = 0;
};

// The individual suites.  Each one advances the shared random source, so
// run() below is reproducible only because it chains them in a fixed order;
// callers timing suites separately should use one fresh source per suite.
SuiteResult golden_homology_suite(bool inject_fault = false);
SuiteResult condition_equivalence_suite(gen::RandomSource& rs, int count);
SuiteResult duality_suite(gen::RandomSource& rs, int count);
SuiteResult cone_criterion_suite(gen::RandomSource& rs, int count);
SuiteResult helly_suite(gen::RandomSource& rs, int count);
SuiteResult kkm_suite(gen::RandomSource& rs, int count);
SuiteResult theorem11_suite(gen::RandomSource& rs, int count);
SuiteResult lp_oracle_suite(gen::RandomSource& rs, int count);
SuiteResult nerve_shortcut_suite(gen::RandomSource& rs, int count);

struct Outcome {
  std::vector<SuiteResult> suites;
  bool all_passed() const {
    for (const auto& s : suites)
      if (s.failures > 0) return false;
    return true;
  }
};

// Runs every randomized equivalence suite at acceptance sizes.  The fault
// switch flips one golden acyclicity expectation so the harness can prove
// it notices a broken build.
Outcome run(uint64_t seed, bool inject_fault = false);

// Deterministic report: sorted keys, no timing data ("timing" is null), so
// equal seeds give byte-identical documents.
nlohmann::json report(const Outcome& o, uint64_t seed, bool inject_fault,
                      const std::string& version);

}  // namespace conetop::selftest

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tpw/json_io.hpp"

namespace tpw {

struct SuiteConfig {
  int n = 0;           // 0: the suite's default range, cycled over trials
  std::uint64_t seed = 1;
  int trials = -1;     // -1: the suite's default
  int workers = 1;     // never affects the report
  long double tol = 1e-12L;
};

struct SuiteInfo {
  std::string name;
  int n_min, n_max;
  int default_trials;
  std::string summary;
};
const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo& suite_info(const std::string& name);  // throws std::invalid_argument

// Runs every record of a property check. Trial i draws from Rng::for_trial(seed, i)
// and records are merged by index, so the report is independent of cfg.workers.
// The report carries "pass", "passed", "failed" and one "records" entry per trial,
// each with its own "pass". Throws std::invalid_argument for an unknown property
// or an n outside the suite's range.
json run_suite(const std::string& property, const SuiteConfig& cfg);

// Worker count from TPW_WORKERS, or 1 when unset or invalid.
int default_workers();

}  // namespace tpw

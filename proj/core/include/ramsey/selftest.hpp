#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/report.hpp"

namespace ramsey {

struct SelftestOptions {
  std::uint64_t seed = 1;
  int threads = 1;
  mpfr_prec_t max_precision = 512;
};

/// Outcome of one suite. `report` is deterministic: no timings, no thread counts.
struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string summary;
  Json report;
};

/// base-pair, oracle, peeling, alpha-recursion, identities, join-chain, dominance, pipeline, determinism
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SelftestOptions& options = {});

}  // namespace ramsey

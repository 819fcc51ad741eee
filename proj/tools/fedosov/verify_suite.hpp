// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fedosov::cli {

struct CheckResult {
  std::string id;
  double tolerance = 0.0;
  double observed = 0.0;
  bool pass = false;
  bool informational = false;  // reported, never gating
};

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  std::size_t random_forms = 100;
  std::size_t monopole_points = 20;
};

/// Runs every property check; results are sorted by id.
std::vector<CheckResult> run_verify_suite(const SuiteOptions& options);

bool suite_passed(const std::vector<CheckResult>& results);

}  // namespace fedosov::cli

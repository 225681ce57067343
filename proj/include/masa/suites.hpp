#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "masa/report.hpp"

namespace masa {

struct SuiteConfig {
  std::uint64_t seed = 7;
  int rank = 2;
  int radius = 3;
  int samples = 0;   // 0 = criterion default
  int restarts = 8;  // optimizer restarts for bracketed checks
};

struct SuiteResult {
  std::string name;
  std::vector<CheckReport> checks;
  bool pass = true;

  nlohmann::json to_json() const;
};

/// One acceptance criterion (1..11).
SuiteResult run_criterion(int id, const SuiteConfig& cfg);

/// Criterion ids for a named suite: sec2, sec3, sec6, sec7, affine,
/// stallings, all.
std::vector<int> suite_criteria(const std::string& suite);

SuiteResult run_suite(const std::string& suite, const SuiteConfig& cfg);

}  // namespace masa

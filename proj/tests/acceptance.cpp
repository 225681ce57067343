// Acceptance gate: runs every numbered criterion with default configuration
// and prints one pass/fail line per criterion.
#include <chrono>
#include <cstdio>
#include <exception>

#include "masa/suites.hpp"

int main() {
  masa::SuiteConfig cfg;  // defaults: seed 7, rank 2, radius 3
  bool all_pass = true;
  for (int id = 1; id <= 11; ++id) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
      auto res = masa::run_criterion(id, cfg);
      pass = res.pass;
      int failed = 0;
      for (const auto& c : res.checks)
        if (!c.pass) {
          ++failed;
          if (detail.empty()) detail = c.check;
        }
      if (failed > 1) detail += " (+" + std::to_string(failed - 1) + " more)";
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                t0)
                      .count();
    std::printf("criterion %2d: %s  (%.1fs)%s%s\n", id, pass ? "PASS" : "FAIL",
                secs, detail.empty() ? "" : "  ", detail.c_str());
    all_pass = all_pass && pass;
  }
  std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}

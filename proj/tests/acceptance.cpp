// Acceptance suite: one pass/fail line per criterion, full-scale bounds.
// Exact arithmetic throughout; every comparison is equality.

#include <chrono>
#include <cstdio>
#include <exception>
#include <thread>

#include "hecke2/verification.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  hecke2::VerifyOptions options;  // full-scale defaults
  const unsigned hw = std::thread::hardware_concurrency();
  options.jobs = hw ? (hw < 8 ? hw : 8) : 2;
  bool all_pass = true;
  const auto t0 = clock::now();
  try {
    const auto results = hecke2::run_checks(options);
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                  r.detail.c_str());
    }
  } catch (const std::exception& err) {
    std::printf("FAIL exception: %s\n", err.what());
    all_pass = false;
  }
  const auto seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(clock::now() - t0)
          .count();
  std::printf("%s (%.1fs)\n", all_pass ? "acceptance: all criteria passed"
                                       : "acceptance: FAILURES",
              seconds);
  return all_pass ? 0 : 1;
}

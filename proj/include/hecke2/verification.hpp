#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hecke2 {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Bounds for the verification battery. Defaults are the full-scale run;
/// quick_options() is sized for CI.
struct VerifyOptions {
  std::size_t muller_bound = 10000;      // every C_{4m} with 4m < bound
  std::size_t degree_law_bound = 10000;  // n <= bound
  std::size_t kernel_max_m = 200;
  std::size_t lemma211_max_m = 64;
  std::size_t pr1_max_m = 32;
  std::size_t operator_trials = 1000;
  std::size_t operator_degree = 512;
  std::size_t t_law_max_n = 512;
  std::size_t lemma28_max_k = 128;
  std::size_t series_precision = 10000;
  std::size_t u3_check_nmax = 64;
  std::size_t u3_check_precision = 4096;
  std::size_t u2_odd_samples = 100;
  std::size_t grid_grade = 4;
  std::size_t stabilization_precision = 4096;
  std::size_t stabilization_samples = 25;
  unsigned jobs = 1;
  std::uint64_t seed = 0x68ec2e01ULL;
};

VerifyOptions quick_options();

std::vector<CheckResult> run_checks(const VerifyOptions& options);

}  // namespace hecke2

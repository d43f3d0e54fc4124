#pragma once

// Verification suites. Each check compares a closed-form statement against an
// independent computation (the Newton oracle, exhaustive enumeration, direct
// symbolic expansion) and records how many instances it covered.

#include <string>
#include <vector>

#include "dieu/arith.hpp"
#include "dieu/strata.hpp"

namespace dieu {

struct VerifyConfig {
  u64 seed = 1;
  long long size_cap = kDefaultSizeCap;
  std::vector<u64> hecke_primes{3, 5};
  int hecke_s = 1;
};

struct Check {
  int criterion = 0;         // acceptance item this check backs, 0 for extra checks
  std::string name;
  std::string validates;     // the statement being checked
  bool passed = false;
  long long instances = 0;
  long long failures = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

// Suites: arith, slopes, strata, deform, hecke, all. Throws unknown_suite.
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);
const std::vector<std::string>& suite_names();

// The individual checks, numbered by acceptance item.
Check check_slope_family(const VerifyConfig& cfg);          // 1
Check check_t1_formula(const VerifyConfig& cfg);            // 2
Check check_t2_formula(const VerifyConfig& cfg);            // 3
Check check_degenerate_coefficients(const VerifyConfig& cfg);  // 4
Check check_spaced_bound(const VerifyConfig& cfg);          // 5
Check check_newton_strata_t1(const VerifyConfig& cfg);      // 6
Check check_ordinary_locus(const VerifyConfig& cfg);        // 7
Check check_spaced_density(const VerifyConfig& cfg);        // 8
Check check_superspecial_neighbourhood(const VerifyConfig& cfg);  // extra, deform suite
Check check_hecke(const VerifyConfig& cfg);                 // 9
Check check_non_rapoport(const VerifyConfig& cfg);          // 10
Check check_formulas(const VerifyConfig& cfg);              // 11
Check check_det_identity(const VerifyConfig& cfg);          // 12
Check check_arith(const VerifyConfig& cfg);                 // 13

}  // namespace dieu

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// DIEU_SEED overrides the seed used by the randomized checks.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "dieu/error.hpp"
#include "dieu/verify.hpp"

int main() {
  using namespace dieu;
  VerifyConfig cfg;
  if (const char* env = std::getenv("DIEU_SEED")) cfg.seed = std::strtoull(env, nullptr, 10);

  using Fn = Check (*)(const VerifyConfig&);
  const std::vector<std::pair<int, Fn>> criteria = {
      {1, check_slope_family},  {2, check_t1_formula},       {3, check_t2_formula},
      {4, check_degenerate_coefficients},                    {5, check_spaced_bound},
      {6, check_newton_strata_t1},                           {7, check_ordinary_locus},
      {8, check_spaced_density}, {9, check_hecke},           {10, check_non_rapoport},
      {11, check_formulas},     {12, check_det_identity},    {13, check_arith},
  };

  int failed = 0;
  for (auto [n, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = fn(cfg);
    } catch (const std::exception& e) {
      c.name = "aborted";
      c.detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!c.passed) ++failed;
    std::printf("criterion %2d: %s  %s (%lld instances, %lld failures, %.2fs) %s\n", n, c.passed ? "PASS" : "FAIL",
                c.name.c_str(), c.instances, c.failures, secs, c.detail.c_str());
  }
  std::printf("%s: %d of %zu criteria passed (seed %llu)\n", failed ? "FAIL" : "PASS",
              static_cast<int>(criteria.size()) - failed, criteria.size(),
              static_cast<unsigned long long>(cfg.seed));
  return failed ? 1 : 0;
}

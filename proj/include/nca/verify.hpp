#pragma once

#include <string>
#include <vector>

namespace nca {

struct SuiteResult {
  std::string suite;
  bool pass = false;
  long checks = 0;
  std::string detail;  // first counterexample on failure, else a summary
  double ms = 0;
};

// Each suite pins one theorem-level claim at exact equality. Defaults are
// the full desk-scale bounds; pass a smaller bound to trim runtimes.
SuiteResult suite_display();
SuiteResult suite_counts(int max_n = 8);
SuiteResult suite_basis(int max_n = 6);
SuiteResult suite_weighted(int max_n = 6);
SuiteResult suite_tl(int max_l = 4);
SuiteResult suite_bidet(int max_entry = 4, int max_size = 4);
SuiteResult suite_grass(int max_n = 4, int max_d = 3);
SuiteResult suite_groebner(int max_n = 8, int solve_n = 6);
SuiteResult suite_schubert(int max_total = 5, int max_d = 2);
SuiteResult suite_gl(int max_size = 4);

// which: a suite name or "all". bound > 0 caps each suite's primary bound
// at min(default, bound); bound <= 0 keeps the defaults. Unknown name
// throws bad-suite.
std::vector<SuiteResult> run_suites(const std::string& which, int bound);

}  // namespace nca

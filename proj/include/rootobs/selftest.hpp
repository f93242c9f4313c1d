// Desk-scale property suites runnable from the CLI: lattice contracts,
// root-system invariants, descent properties, and the enumeration oracle.
// Failures print a minimal reproducing input.
#pragma once

#include <string>

namespace rootobs {

struct SelftestOptions {
  bool inject_snf_fault = false;  // deliberately corrupt one normal form
};

struct SelftestResult {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::string log;

  bool ok() const { return failed == 0; }
};

SelftestResult run_selftest(const SelftestOptions& opts);

}  // namespace rootobs

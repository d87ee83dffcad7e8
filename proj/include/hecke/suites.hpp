#pragma once

#include "hecke/root_datum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

struct SuiteReport {
  std::string name;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::vector<std::string> failures;  // first few only
  bool ok() const { return failed == 0; }
};

// assoc, braid, quadratic, blt, blx, blz, roundtrip, triangular, law451,
// dominant, grading, centrality, twist, degree0, geometric
std::vector<std::string> suite_names();

// `inject_fault` flips the sign of one coefficient in every check, as a
// negative control; the suite must then fail.
SuiteReport run_suite(const DatumPtr& d, const std::string& suite, std::uint64_t seed, int n,
                      bool inject_fault = false);

}  // namespace hecke

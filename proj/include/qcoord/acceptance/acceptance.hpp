#pragma once

// The acceptance battery: eleven exact checks, each reduced to pass/fail with a
// short detail string (a counterexample on failure).

#include <string>
#include <vector>

namespace qcoord::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriteria = 11;
inline constexpr unsigned kDefaultSeed = 7;

CriterionResult run_criterion(int id, unsigned seed = kDefaultSeed);
std::vector<CriterionResult> run_all(unsigned seed = kDefaultSeed);

// "criterion 3: PASS  composition series (...)"
std::string format(const CriterionResult& r);

}  // namespace qcoord::acceptance

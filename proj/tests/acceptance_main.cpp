// Prints one line per acceptance criterion; exits nonzero if any fails.

#include <iostream>

#include "qcoord/acceptance/acceptance.hpp"

int main() {
  bool ok = true;
  for (int id = 1; id <= qcoord::acceptance::kCriteria; ++id) {
    const auto r = qcoord::acceptance::run_criterion(id);
    std::cout << qcoord::acceptance::format(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

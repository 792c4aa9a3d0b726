// Runs every acceptance criterion and prints one PASS/FAIL line for each.
//
// A criterion whose only failures are listed in kDocumentedFailures is still
// reported as FAIL, but does not make the binary exit nonzero. Anything else
// failing does.

#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "symcent/suite.hpp"

namespace {

// The stated radical series of the affine counterexample over F_3 is
// [5,4,2,0]. In the 5-dimensional commutative algebra spanned by
// 1, a, a^2, (1+a+a^2)b, (1+a+a^2)b^2 the radical has basis
// u = a-1, u^2, u^2 b, u^2 b^2, and every product of two of these except
// u*u is zero since u^3 = 0. Hence J^2 = <u^2> and the series is [5,4,1,0].
const std::map<int, std::vector<std::string>> kDocumentedFailures = {
    {2, {"radical dims {5,4,1,0}, want {5,4,2,0}"}},
};

}  // namespace

int main() {
  bool ok = true;
  std::size_t passed = 0;
  for (int id = 1; id <= symcent::kCriterionCount; ++id) {
    const auto r = symcent::run_criterion(id);
    std::cout << "criterion " << (id < 10 ? " " : "") << id << "  " << (r.pass ? "PASS" : "FAIL") << "  "
              << r.title << "  (" << r.checks << " checks, " << static_cast<long long>(r.elapsed_ms)
              << " ms)\n";
    if (r.pass) {
      ++passed;
      continue;
    }
    const auto known = kDocumentedFailures.find(id);
    for (const auto& f : r.failures) {
      const bool documented = known != kDocumentedFailures.end() &&
                              std::find(known->second.begin(), known->second.end(), f) != known->second.end();
      std::cout << "              " << f << (documented ? "  [documented discrepancy]" : "") << "\n";
      ok &= documented;
    }
  }
  std::cout << passed << "/" << symcent::kCriterionCount << " criteria passed";
  std::cout << (ok ? ", no undocumented failures\n" : ", UNDOCUMENTED FAILURES\n");
  return ok ? 0 : 1;
}

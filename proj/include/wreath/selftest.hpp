#pragma once

#include <string>
#include <vector>

namespace wreath {

struct SuiteResult {
    std::string name;
    bool ok = true;
    double seconds = 0.0;
    std::string detail;  // first counterexample when failed
};

/*
 * Built-in verification sweep:
 *   - brute-force wreath conjugacy vs type combinatorics for
 *     (Z2, n<=4), (Z3, n<=3), (S3, n<=2),
 *   - product form vs direct type summation on all built-in fixtures to q^4
 *     and on 20 seeded random sector data to q^3,
 *   - Hilbert scheme series vs trivial-group wreath series to q^5,
 *   - q = 0 elliptic consistency on the d = 2 fixtures to p^4.
 */
std::vector<SuiteResult> run_selftest();

}  // namespace wreath

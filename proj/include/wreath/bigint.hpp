#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wreath {

// Exact integer arithmetic throughout; Hodge and Euler coefficients grow
// combinatorially with the truncation degree.
using Int = boost::multiprecision::cpp_int;

// C(n, k) for k >= 0. Exact at every intermediate step: the running product
// of j consecutive integers is divisible by j!.
inline Int binomial(const Int& n, long long k) {
    if (k < 0) return 0;
    if (n >= 0 && n < k) return 0;
    Int r = 1;
    for (long long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

inline Int factorial(long long n) {
    Int r = 1;
    for (long long j = 2; j <= n; ++j) r *= j;
    return r;
}

}  // namespace wreath

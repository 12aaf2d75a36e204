#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ringkit {

// Exact arbitrary-precision arithmetic; cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the invariant we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= Integer(n - i);
        r /= Integer(i + 1);
    }
    return r;
}

}  // namespace ringkit

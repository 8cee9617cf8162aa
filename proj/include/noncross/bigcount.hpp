#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "noncross/errors.hpp"

namespace noncross {

// All counting runs on exact arbitrary-precision integers; expectations on
// exact rationals.  No floating point touches a counting path.
using BigCount = boost::multiprecision::cpp_int;
using ExactRatio = boost::multiprecision::cpp_rational;

// C(a,b) with the out-of-range convention: 0 whenever b < 0, a < 0 or b > a,
// and C(a,0) = 1 for a >= 0.  Every closed form in formulas.hpp is evaluated
// under this convention, which makes the formulas total.
inline BigCount binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigCount r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i; // exact at every step
    }
    return r;
}

inline BigCount factorial(long long a) {
    if (a < 0) throw out_of_range("factorial of negative argument");
    BigCount r = 1;
    for (long long v = 2; v <= a; ++v) r *= v;
    return r;
}

// a!/b! as a product, or 0 when the denominator factorial has a negative
// argument (the vanishing-term convention used by the type-count formulas).
inline BigCount factorial_quotient(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    BigCount r = 1;
    for (long long v = b + 1; v <= a; ++v) r *= v;
    return r;
}

// Division that must come out even; anything else is an arithmetic bug.
inline BigCount exact_div(const BigCount& num, const BigCount& den) {
    if (den == 0) throw inexact_division("exact_div: zero divisor");
    BigCount q = num / den;
    if (q * den != num)
        throw inexact_division("exact_div: " + num.str() + " not divisible by " + den.str());
    return q;
}

} // namespace noncross

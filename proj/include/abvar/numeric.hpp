#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace abvar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// q^e for possibly negative e (q != 0)
inline Rat rat_pow(const Int& q, long e) {
    if (e >= 0) return Rat(int_pow(q, static_cast<unsigned>(e)));
    return Rat(1, int_pow(q, static_cast<unsigned>(-e)));
}

inline Int binomial(long n, long k) {
    if (k == 0) return 1;
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace abvar

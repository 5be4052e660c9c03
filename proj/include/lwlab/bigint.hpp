#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace lwlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// C(n,k) for integer n >= 0; zero outside 0 <= k <= n.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int multinomial(long n, const std::vector<long>& parts) {
    Int r = factorial(n);
    long s = 0;
    for (long p : parts) {
        r /= factorial(p);
        s += p;
    }
    if (s != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    return r;
}

// Exact division; throws if the quotient is not integral.
inline Int div_exact(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::domain_error("div_exact: not divisible");
    return q;
}

}  // namespace lwlab

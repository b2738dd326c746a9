#ifndef RECRING_INTMATH_HPP
#define RECRING_INTMATH_HPP

#include "recring/coeff.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace recring {

inline Int factorial(long long n) {
    if (n < 0)
        throw std::invalid_argument("factorial of a negative number");
    Int f = 1;
    for (long long k = 2; k <= n; ++k)
        f *= k;
    return f;
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Int c = 1;
    for (long long j = 1; j <= k; ++j) {
        c *= n - k + j;
        c /= j; // exact: c is a binomial coefficient after each step
    }
    return c;
}

inline int hamming_weight(long long n) {
    if (n < 0)
        throw std::invalid_argument("hamming weight of a negative number");
    return std::popcount(static_cast<unsigned long long>(n));
}

inline Int pow2(int k) {
    Int one = 1;
    return one << k;
}

} // namespace recring

#endif

#pragma once

#include <array>
#include <cassert>

namespace bellpp {

/// n! as an exact double for n <= 20.
inline double factorial(int n) {
    assert(n >= 0 && n <= 20);
    static constexpr std::array<double, 21> table = {1.0,
                                                     1.0,
                                                     2.0,
                                                     6.0,
                                                     24.0,
                                                     120.0,
                                                     720.0,
                                                     5040.0,
                                                     40320.0,
                                                     362880.0,
                                                     3628800.0,
                                                     39916800.0,
                                                     479001600.0,
                                                     6227020800.0,
                                                     87178291200.0,
                                                     1307674368000.0,
                                                     20922789888000.0,
                                                     355687428096000.0,
                                                     6402373705728000.0,
                                                     121645100408832000.0,
                                                     2432902008176640000.0};
    return table[static_cast<std::size_t>(n)];
}

inline double binomial(int n, int k) {
    assert(k >= 0 && k <= n);
    return factorial(n) / (factorial(k) * factorial(n - k));
}

/// x^n for small nonnegative integer n, by repeated multiplication.
inline double ipow(double x, int n) {
    assert(n >= 0);
    double r = 1.0;
    while (n > 0) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

}  // namespace bellpp

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace cfk {

inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline long long ceil_div(long long a, long long b) {
    return -floor_div(-a, b);
}

// Representative of a mod m in [0, m).
inline long long pos_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// Inverse of a mod m in (0, m); requires gcd(a, m) = 1, m >= 2.
inline long long mod_inverse(long long a, long long m) {
    long long r0 = m, r1 = pos_mod(a, m);
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1)
        throw std::domain_error("mod_inverse: arguments are not coprime");
    return pos_mod(t0, m);
}

}  // namespace cfk

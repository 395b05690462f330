#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rsw {

inline std::vector<long long> divisors(long long n) {
    if (n <= 0) throw std::invalid_argument("divisors: argument must be positive");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int mobius(long long n) {
    if (n <= 0) throw std::invalid_argument("mobius: argument must be positive");
    int factors = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;  // square factor
        ++factors;
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

inline long long euler_phi(long long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: argument must be positive");
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// g = gcd(a,b) together with x, y such that a*x + b*y = g
inline long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    long long x1, y1;
    const long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// k with k[0]*a0 + k[1]*a1 + k[2]*a2 = gcd(a0,a1,a2)
inline std::array<long long, 3> bezout_triple(long long a0, long long a1, long long a2) {
    long long x, y;
    const long long g01 = ext_gcd(a0, a1, x, y);
    long long u, v;
    ext_gcd(g01, a2, u, v);
    return {x * u, y * u, v};
}

inline long long gcd_all(std::initializer_list<long long> values) {
    long long g = 0;
    for (long long v : values) g = std::gcd(g, v);
    return g;
}

}  // namespace rsw

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pml {

// Exact arithmetic throughout: factorials, orbit orders and homomesy
// averages overflow fixed-width integers on the larger inputs.
using BigInt = boost::multiprecision::cpp_int;

// Always stored reduced with positive denominator (canonical form of the
// backend).
using Fraction = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

}  // namespace pml

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace ffstark {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline BigInt big_pow(BigInt base, unsigned long e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Largest e with p^e | n (n != 0).
inline long padic_val(BigInt n, const BigInt& p) {
    if (n == 0) throw std::invalid_argument("padic_val of 0");
    if (n < 0) n = -n;
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// p-adic valuation of a rational (may be negative).
inline long padic_val(const Rational& r, const BigInt& p) {
    return padic_val(numerator(r), p) - padic_val(denominator(r), p);
}

inline std::vector<BigInt> prime_factors(BigInt n) {
    std::vector<BigInt> out;
    if (n < 0) n = -n;
    for (BigInt p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace ffstark

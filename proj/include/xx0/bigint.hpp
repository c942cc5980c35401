// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>

#include "xx0/errors.hpp"

namespace xx0 {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt parse_decimal(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw DomainError("not a decimal integer: '" + s + "'");
    }
}

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Natural logarithm of a positive big integer without overflowing a double.
inline double log_bigint(const BigInt& x) {
    if (x <= 0) throw DomainError("log_bigint: argument must be positive");
    const unsigned msb = boost::multiprecision::msb(x);
    if (msb < 1000) return std::log(x.convert_to<double>());
    const unsigned shift = msb - 60;
    const BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

} // namespace xx0

// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Seeded generators for the property tests.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "xx0/combinat.hpp"
#include "xx0/laurent.hpp"
#include "xx0/matrix.hpp"

namespace xx0::testing {

inline constexpr int kPropertyTrials = 200;

inline std::mt19937_64 rng_for(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

inline int uniform_int(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline Partition random_partition(std::mt19937_64& g, int max_part, int max_len) {
    std::vector<int> p(static_cast<std::size_t>(max_len));
    for (auto& v : p) v = uniform_int(g, 0, max_part);
    std::sort(p.rbegin(), p.rend());
    return Partition(std::move(p));
}

inline LaurentPoly random_laurent(std::mt19937_64& g, int lo = -3, int hi = 5, int coeff = 9) {
    LaurentPoly p;
    const int terms = uniform_int(g, 0, 4);
    for (int t = 0; t < terms; ++t) p.add_term(uniform_int(g, lo, hi), uniform_int(g, -coeff, coeff));
    return p;
}

inline std::vector<Complex> random_points(std::mt19937_64& g, int n, double rmin = 0.5, double rmax = 1.2) {
    std::uniform_real_distribution<double> r(rmin, rmax), a(0.0, 2.0 * std::numbers::pi);
    std::vector<Complex> x;
    for (int i = 0; i < n; ++i) {
        const double rad = r(g);
        x.push_back(std::polar(rad, a(g)));
    }
    return x;
}

inline double rel_err(Complex a, Complex b) {
    const double s = std::abs(b);
    return s > 0.0 ? std::abs(a - b) / s : std::abs(a - b);
}

} // namespace xx0::testing

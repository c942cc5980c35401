// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "xx0/bigint.hpp"
#include "xx0/errors.hpp"

namespace xx0 {

/// Laurent polynomial in the formal variable q with big-integer coefficients.
///
/// Stored sparsely as exponent -> coefficient; zero coefficients are never
/// stored, so structural equality is mathematical equality.
class LaurentPoly {
public:
    using Terms = std::map<int, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(int c) { add_term(0, BigInt(c)); }  // NOLINT: implicit scalar embedding
    LaurentPoly(const BigInt& c) { add_term(0, c); }  // NOLINT
    LaurentPoly(std::initializer_list<std::pair<const int, BigInt>> terms) {
        for (const auto& [e, c] : terms) add_term(e, c);
    }

    /// c * q^e.
    static LaurentPoly monomial(int e, const BigInt& c = 1) {
        LaurentPoly p;
        p.add_term(e, c);
        return p;
    }
    static LaurentPoly q() { return monomial(1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Highest exponent; throws on the zero polynomial.
    int degree() const {
        if (is_zero()) throw DomainError("degree of the zero polynomial");
        return terms_.rbegin()->first;
    }
    /// Lowest exponent; throws on the zero polynomial.
    int low_degree() const {
        if (is_zero()) throw DomainError("low degree of the zero polynomial");
        return terms_.begin()->first;
    }

    BigInt coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add_term(int e, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Multiply by q^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly pow(unsigned k) const {
        LaurentPoly r(1), base = *this;
        while (k) {
            if (k & 1u) r *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return r;
    }

    /// Value at q = 1.
    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    /// Exact value at a rational point; q must be nonzero if negative powers occur.
    BigRational eval(const BigRational& x) const {
        if (is_zero()) return 0;
        if (x == 0) {
            if (low_degree() < 0) throw DomainError("negative power of q evaluated at 0");
            return BigRational(coeff(0));
        }
        // Horner from the top exponent down, then rescale by x^low.
        BigRational acc = 0;
        int prev = degree();
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            acc *= rational_pow(x, prev - it->first);
            acc += BigRational(it->second);
            prev = it->first;
        }
        return acc * signed_pow(x, prev);
    }

    std::complex<double> eval(std::complex<double> z) const {
        std::complex<double> s = 0.0;
        for (const auto& [e, c] : terms_) s += c.convert_to<double>() * std::pow(z, e);
        return s;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) os << mag << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    static BigRational rational_pow(const BigRational& x, int k) {
        BigRational r = 1, b = x;
        unsigned u = static_cast<unsigned>(k);
        while (u) {
            if (u & 1u) r *= b;
            u >>= 1u;
            if (u) b *= b;
        }
        return r;
    }
    static BigRational signed_pow(const BigRational& x, int k) {
        return k >= 0 ? rational_pow(x, k) : BigRational(1) / rational_pow(x, -k);
    }

    Terms terms_;
};

/// a / b when b divides a exactly in the Laurent ring; throws otherwise.
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return {};
    const int lb = b.low_degree();
    const BigInt& cb = b.terms().begin()->second;
    const int top = a.degree() - b.degree();
    LaurentPoly rem = a;
    LaurentPoly quot;
    while (!rem.is_zero()) {
        const int e = rem.low_degree() - lb;
        if (e > top) break;
        const BigInt& c = rem.terms().begin()->second;
        if (c % cb != 0) break;
        const BigInt t = c / cb;
        quot.add_term(e, t);
        rem -= b.shifted(e) * LaurentPoly(t);
    }
    if (!rem.is_zero())
        throw InexactDivisionError("Laurent division leaves a remainder: (" + a.to_string() + ") / (" +
                                   b.to_string() + ")");
    return quot;
}

} // namespace xx0

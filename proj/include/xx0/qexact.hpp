// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

#include "xx0/bigint.hpp"
#include "xx0/errors.hpp"
#include "xx0/laurent.hpp"
#include "xx0/matrix.hpp"

namespace xx0 {

/// n / 2 for an exponent that must be even; throws if it is not.
inline long exact_half(long n, const char* what = "exponent") {
    if (n % 2 != 0) throw Error(std::string(what) + " is not an integer: " + std::to_string(n) + "/2");
    return n / 2;
}

/// [n] = 1 + q + ... + q^{n-1}.
inline LaurentPoly q_number(int n) {
    if (n < 0) throw DomainError("q_number: n must be non-negative");
    LaurentPoly p;
    for (int k = 0; k < n; ++k) p.add_term(k, 1);
    return p;
}

/// [n]! = [1][2]...[n].
inline LaurentPoly q_factorial(int n) {
    if (n < 0) throw DomainError("q_factorial: n must be non-negative");
    LaurentPoly p(1);
    for (int k = 2; k <= n; ++k) p *= q_number(k);
    return p;
}

namespace detail {

class QBinomialTable {
public:
    LaurentPoly get(int n, int r) {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<int>(rows_.size()) <= n) extend();
        return rows_[n][r];
    }

private:
    // Row n from row n-1 via [n,r] = [n-1,r-1] + q^r [n-1,r].
    void extend() {
        const int n = static_cast<int>(rows_.size());
        std::vector<LaurentPoly> row(n + 1);
        row[0] = 1;
        row[n] = 1;
        for (int r = 1; r < n; ++r) row[r] = rows_[n - 1][r - 1] + rows_[n - 1][r].shifted(r);
        rows_.push_back(std::move(row));
    }

    std::mutex mu_;
    std::vector<std::vector<LaurentPoly>> rows_;
};

inline QBinomialTable& q_binomial_table() {
    static QBinomialTable table;
    return table;
}

} // namespace detail

/// Gaussian binomial [n choose r]_q; zero when r < 0, r > n or n < 0.
inline LaurentPoly q_binomial(int n, int r) {
    if (n < 0 || r < 0 || r > n) return {};
    return detail::q_binomial_table().get(n, r);
}

/// Sum_j q^{(N-j)(r-j)} [N choose j][Np choose r-j]; equals [N+Np choose r].
inline LaurentPoly q_vandermonde(int N, int Np, int r) {
    if (N < 0 || Np < 0 || r < 0) throw DomainError("q_vandermonde: arguments must be non-negative");
    LaurentPoly s;
    for (int j = 0; j <= std::min(N, r); ++j) s += (q_binomial(N, j) * q_binomial(Np, r - j)).shifted((N - j) * (r - j));
    return s;
}

/// R_r(N) = q^{r(r-1)/2} [N choose r] = e_r(1, q, ..., q^{N-1}).
inline LaurentPoly es_special_R(int r, int N) {
    if (r < 0) throw DomainError("es_special_R: r must be non-negative");
    return q_binomial(N, r).shifted(r * (r - 1) / 2);
}

/// L_r(N) = q^{r(r+1)/2} [N choose r] = e_r(q, q^2, ..., q^N).
inline LaurentPoly es_special_L(int r, int N) {
    if (r < 0) throw DomainError("es_special_L: r must be non-negative");
    return q_binomial(N, r).shifted(r * (r + 1) / 2);
}

/// Pair of strictly increasing non-negative index tuples of equal length.
struct IndexTuples {
    std::vector<int> a;
    std::vector<int> b;

    void validate() const {
        if (a.size() != b.size()) throw DomainError("index tuples must have equal length");
        auto check = [](const std::vector<int>& t, const char* name) {
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i] < 0) throw DomainError(std::string(name) + " has a negative entry");
                if (i > 0 && t[i] <= t[i - 1]) throw DomainError(std::string(name) + " is not strictly increasing");
            }
        };
        check(a, "a");
        check(b, "b");
    }

    std::size_t size() const noexcept { return a.size(); }
};

/// Exact quotient of big integers; throws if the division leaves a remainder.
inline BigInt exact_div(const BigInt& x, const BigInt& y) {
    if (y == 0) throw DomainError("division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(x, y, q, r);
    if (r != 0) throw InexactDivisionError("integer division leaves a remainder");
    return q;
}

inline BigInt exact_det(const Matrix<BigInt>& m) {
    return bareiss_det(m, [](const BigInt& x, const BigInt& y) { return exact_div(x, y); });
}

/// Determinant over the Laurent ring by fraction-free elimination. Matrices of
/// size <= 4 are also expanded by minors and the two results compared.
inline LaurentPoly exact_det(const Matrix<LaurentPoly>& m) {
    LaurentPoly d = bareiss_det(m, [](const LaurentPoly& x, const LaurentPoly& y) { return exact_div(x, y); });
    if (m.rows() <= 4 && det_by_minors(m) != d) throw Error("exact_det: elimination disagrees with minor expansion");
    return d;
}

/// det( C(a_j, b_i) ).
inline BigInt binomial_determinant(const IndexTuples& t) {
    t.validate();
    const std::size_t S = t.size();
    Matrix<BigInt> m(S, S);
    for (std::size_t i = 0; i < S; ++i)
        for (std::size_t j = 0; j < S; ++j) m(i, j) = binomial(t.a[j], t.b[i]);
    return exact_det(m);
}

/// det( [a_j choose b_i]_q ).
inline LaurentPoly q_binomial_determinant(const IndexTuples& t) {
    t.validate();
    const std::size_t S = t.size();
    Matrix<LaurentPoly> m(S, S);
    for (std::size_t i = 0; i < S; ++i)
        for (std::size_t j = 0; j < S; ++j) m(i, j) = q_binomial(t.a[j], t.b[i]);
    return exact_det(m);
}

} // namespace xx0

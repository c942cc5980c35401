// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Schur functions and Cauchy-Binet type sums of their products.
//
// Every routine is a template over the coordinate type: std::complex<double>
// for numeric evaluation, LaurentPoly for exact evaluation at powers of q.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "xx0/combinat.hpp"
#include "xx0/errors.hpp"
#include "xx0/laurent.hpp"
#include "xx0/matrix.hpp"
#include "xx0/qexact.hpp"

namespace xx0 {

template <class T>
using PointVector = std::vector<T>;

/// Relative distance below which two numeric coordinates count as equal.
inline constexpr double kCoincidenceThreshold = 1e-10;

inline Complex determinant(const Matrix<Complex>& m) { return lu_determinant(m).value; }
inline LaurentPoly determinant(const Matrix<LaurentPoly>& m) { return exact_det(m); }

inline Complex divide(const Complex& a, const Complex& b) { return a / b; }
inline LaurentPoly divide(const LaurentPoly& a, const LaurentPoly& b) { return exact_div(a, b); }

template <class T>
T ipow(T x, long e) {
    if (e < 0) throw DomainError("ipow: negative exponent");
    T r{1};
    while (e) {
        if (e & 1) r = r * x;
        e >>= 1;
        if (e) x = x * x;
    }
    return r;
}

inline bool has_coincident_points(const PointVector<Complex>& x) {
    double scale = 0.0;
    for (const auto& v : x) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (std::abs(x[i] - x[j]) <= kCoincidenceThreshold * scale) return true;
    return false;
}

inline bool has_coincident_points(const PointVector<LaurentPoly>& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j]) return true;
    return false;
}

/// e_0(x), ..., e_N(x) from the coefficients of prod_i (1 + t x_i).
template <class T>
std::vector<T> elementary_symmetric_all(const PointVector<T>& x) {
    std::vector<T> e(x.size() + 1, T{});
    e[0] = T{1};
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t r = i + 1; r >= 1; --r) e[r] = e[r] + e[r - 1] * x[i];
    return e;
}

template <class T>
T elementary_symmetric(int r, const PointVector<T>& x) {
    if (r < 0) throw DomainError("elementary_symmetric: r must be non-negative");
    if (static_cast<std::size_t>(r) > x.size()) return T{};
    return elementary_symmetric_all(x)[static_cast<std::size_t>(r)];
}

/// prod_{m<l} (x_m - x_l) = det(x_j^{N-k}).
template <class T>
T vandermonde(const PointVector<T>& x) {
    T v{1};
    for (std::size_t m = 0; m < x.size(); ++m)
        for (std::size_t l = m + 1; l < x.size(); ++l) v = v * (x[m] - x[l]);
    return v;
}

/// S_lambda(x) = det(e_{lambda'_i - i + j}(x)), the dual Jacobi-Trudi form.
/// Valid for repeated coordinates.
template <class T>
T schur_jacobi_trudi(const Partition& lambda, const PointVector<T>& x) {
    const Partition conj = conjugate(lambda);
    const std::size_t m = conj.length();
    if (m == 0) return T{1};
    const std::vector<T> e = elementary_symmetric_all(x);
    const long N = static_cast<long>(x.size());
    Matrix<T> a(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const long r = conj[i] - static_cast<long>(i) + static_cast<long>(j);
            if (r >= 0 && r <= N) a(i, j) = e[static_cast<std::size_t>(r)];
        }
    return determinant(a);
}

/// S_lambda(x) = det(x_j^{lambda_k + N - k}) / V(x). Needs distinct coordinates.
template <class T>
T schur_bialternant(const Partition& lambda, const PointVector<T>& x) {
    const std::size_t N = x.size();
    if (lambda.length() > N) return T{};
    if (has_coincident_points(x))
        throw DegenerateInputError("schur_bialternant: coincident points; use schur_jacobi_trudi");
    Matrix<T> a(N, N);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t j = 0; j < N; ++j) a(k, j) = ipow(x[j], lambda[k] + static_cast<long>(N - 1 - k));
    return divide(determinant(a), vandermonde(x));
}

/// Sum over semistandard tableaux of shape lambda with entries 1..N.
template <class T>
T schur_ssyt_oracle(const Partition& lambda, const PointVector<T>& x) {
    const int N = static_cast<int>(x.size());
    if (lambda.weight() > 12 || N > 6) throw EnumerationLimitError("schur_ssyt_oracle: needs |lambda| <= 12, N <= 6", 12);
    if (lambda.length() > static_cast<std::size_t>(N)) return T{};
    const std::size_t rows = lambda.length();
    std::vector<std::vector<int>> tab(rows);
    for (std::size_t i = 0; i < rows; ++i) tab[i].assign(static_cast<std::size_t>(lambda[i]), 0);
    std::vector<int> mult(static_cast<std::size_t>(N), 0);
    T total{};
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t j) {
        if (i == rows) {
            T term{1};
            for (int k = 0; k < N; ++k) term = term * ipow(x[k], mult[k]);
            total = total + term;
            return;
        }
        if (j == tab[i].size()) {
            fill(i + 1, 0);
            return;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, tab[i][j - 1]);
        if (i > 0) lo = std::max(lo, tab[i - 1][j] + 1);
        for (int v = lo; v <= N; ++v) {
            tab[i][j] = v;
            ++mult[v - 1];
            fill(i, j + 1);
            --mult[v - 1];
        }
    };
    fill(0, 0);
    return total;
}

/// 1 + z + ... + z^{count-1}; equals count at z = 1.
inline Complex geometric_entry(const Complex& z, long count) {
    if (count <= 0) return 0.0;
    if (count > 4096 && std::abs(1.0 - z) > 1e-6) return (1.0 - std::pow(z, static_cast<double>(count))) / (1.0 - z);
    Complex s = 0.0;
    for (long m = 0; m < count; ++m) s = s * z + 1.0;
    return s;
}

inline LaurentPoly geometric_entry(const LaurentPoly& z, long count) {
    LaurentPoly s;
    for (long m = 0; m < count; ++m) s = s * z + LaurentPoly(1);
    return s;
}

/// P_{L/n}(y, x) = sum over lambda with n <= lambda_N <= ... <= lambda_1 <= L
/// of S_lambda(y) S_lambda(x), via
/// prod_l (y_l x_l)^n det(sum_{m<N+L-n} (x_k y_j)^m) / (V(y) V(x)).
template <class T>
T binet_cauchy_kernel(int L, int n, const PointVector<T>& y, const PointVector<T>& x) {
    if (n < 0 || n > L) throw DomainError("binet_cauchy_kernel: need 0 <= n <= L");
    if (x.size() != y.size()) throw DomainError("binet_cauchy_kernel: x and y must have equal length");
    const std::size_t N = x.size();
    if (N == 0) return T{1};
    if (has_coincident_points(x) || has_coincident_points(y))
        throw DegenerateInputError("binet_cauchy_kernel: coincident points; use binet_cauchy_bruteforce");
    const long count = static_cast<long>(N) + L - n;
    Matrix<T> t(N, N);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t j = 0; j < N; ++j) t(k, j) = geometric_entry(x[k] * y[j], count);
    T pref{1};
    for (std::size_t l = 0; l < N; ++l) pref = pref * ipow(y[l] * x[l], n);
    return pref * divide(determinant(t), vandermonde(y) * vandermonde(x));
}

/// Largest number of partitions a brute-force Schur sum may visit.
inline constexpr std::size_t kBruteForceBudget = 1'000'000;

/// P_{L/n}(y, x) by direct summation over partitions.
template <class T>
T binet_cauchy_bruteforce(int L, int n, const PointVector<T>& y, const PointVector<T>& x,
                          std::size_t budget = kBruteForceBudget) {
    if (n < 0 || n > L) throw DomainError("binet_cauchy_bruteforce: need 0 <= n <= L");
    if (x.size() != y.size()) throw DomainError("binet_cauchy_bruteforce: x and y must have equal length");
    const int N = static_cast<int>(x.size());
    const PartitionsInBox box(L - n, N);
    if (box.size() > budget) throw EnumerationLimitError("binet_cauchy_bruteforce", budget);
    T total{};
    for (const Partition& mu : box) {
        std::vector<int> parts = mu.padded(static_cast<std::size_t>(N));
        for (int& p : parts) p += n;
        const Partition lambda(std::move(parts));
        total = total + schur_jacobi_trudi(lambda, y) * schur_jacobi_trudi(lambda, x);
    }
    return total;
}

/// Sum over lambda in the K x (N-n) box of S_{lambda-hat}(w) S_lambda(z),
/// where w has N coordinates, z has N-n, and lambda-hat is lambda padded
/// with n zero parts.
template <class T>
T prop2_sum_bruteforce(int K, int n, const PointVector<T>& w, const PointVector<T>& z,
                       std::size_t budget = kBruteForceBudget) {
    const int N = static_cast<int>(w.size());
    if (K < 0 || n < 0 || n > N) throw DomainError("prop2_sum_bruteforce: need K >= 0, 0 <= n <= N");
    if (z.size() != static_cast<std::size_t>(N - n)) throw DomainError("prop2_sum_bruteforce: z must have N-n coordinates");
    const PartitionsInBox box(K, N - n);
    if (box.size() > budget) throw EnumerationLimitError("prop2_sum_bruteforce", budget);
    T total{};
    for (const Partition& lambda : box) total = total + schur_jacobi_trudi(lambda, w) * schur_jacobi_trudi(lambda, z);
    return total;
}

/// det(T-bar) / (V(z) V(w)) with T-bar rows k < N-n equal to
/// sum_{m=0}^{K+N-1} (z_k w_j)^m and rows k >= N-n equal to w_j^{N-1-k}.
/// Equals prod_l z_l^n times prop2_sum_bruteforce(K, n, w, z).
template <class T>
T prop2_determinant(int K, int n, const PointVector<T>& w, const PointVector<T>& z) {
    const std::size_t N = w.size();
    if (K < 0 || n < 0 || static_cast<std::size_t>(n) > N) throw DomainError("prop2_determinant: need K >= 0, 0 <= n <= N");
    const std::size_t Nz = N - static_cast<std::size_t>(n);
    if (z.size() != Nz) throw DomainError("prop2_determinant: z must have N-n coordinates");
    if (N == 0) return T{1};
    if (has_coincident_points(w) || has_coincident_points(z))
        throw DegenerateInputError("prop2_determinant: coincident points; use prop2_sum_bruteforce");
    const long count = static_cast<long>(K) + static_cast<long>(N);
    Matrix<T> t(N, N);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t j = 0; j < N; ++j)
            t(k, j) = k < Nz ? geometric_entry(z[k] * w[j], count) : ipow(w[j], static_cast<long>(N - 1 - k));
    return divide(determinant(t), vandermonde(z) * vandermonde(w));
}

/// The same identity with the roles of the two point sets exchanged:
/// z has N coordinates, w has N-n, and the last n columns hold z_k^{N-1-j}.
/// Equals prod_l w_l^n times sum_lambda S_lambda(w) S_{lambda-hat}(z).
template <class T>
T prop2_mirror_determinant(int K, int n, const PointVector<T>& w, const PointVector<T>& z) {
    const std::size_t N = z.size();
    if (K < 0 || n < 0 || static_cast<std::size_t>(n) > N) throw DomainError("prop2_mirror_determinant: need K >= 0, 0 <= n <= N");
    const std::size_t Nw = N - static_cast<std::size_t>(n);
    if (w.size() != Nw) throw DomainError("prop2_mirror_determinant: w must have N-n coordinates");
    if (N == 0) return T{1};
    if (has_coincident_points(w) || has_coincident_points(z))
        throw DegenerateInputError("prop2_mirror_determinant: coincident points");
    const long count = static_cast<long>(K) + static_cast<long>(N);
    Matrix<T> t(N, N);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t j = 0; j < N; ++j)
            t(k, j) = j < Nw ? geometric_entry(z[k] * w[j], count) : ipow(z[k], static_cast<long>(N - 1 - j));
    return divide(determinant(t), vandermonde(w) * vandermonde(z));
}

} // namespace xx0

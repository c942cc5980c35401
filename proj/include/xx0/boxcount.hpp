// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>
#include <vector>

#include "xx0/bigint.hpp"
#include "xx0/combinat.hpp"
#include "xx0/errors.hpp"
#include "xx0/laurent.hpp"
#include "xx0/matrix.hpp"
#include "xx0/qexact.hpp"
#include "xx0/schur.hpp"

namespace xx0 {

namespace detail {

// prod (1 - q^{num_i}) / prod (1 - q^{den_i}), after cancelling common factors.
inline LaurentPoly cyclotomic_ratio(std::vector<int> num, std::vector<int> den) {
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    std::vector<int> n2, d2;
    std::set_difference(num.begin(), num.end(), den.begin(), den.end(), std::back_inserter(n2));
    std::set_difference(den.begin(), den.end(), num.begin(), num.end(), std::back_inserter(d2));
    LaurentPoly top(1), bottom(1);
    for (int e : n2) top *= LaurentPoly(1) - LaurentPoly::monomial(e);
    for (int e : d2) bottom *= LaurentPoly(1) - LaurentPoly::monomial(e);
    return exact_div(top, bottom);
}

inline void require_sides(int L, int N, int P, const char* what) {
    if (L < 0 || N < 0 || P < 0) throw DomainError(std::string(what) + ": box sides must be non-negative");
}

inline void require_cspp_domain(int N, int P, const char* what) {
    if (N < 0 || P < N - 1) throw DomainError(std::string(what) + ": need N >= 0 and P >= N-1");
}

} // namespace detail

/// Generating function of plane partitions in the L x N x P box, by volume.
inline LaurentPoly zq(int L, int N, int P) {
    detail::require_sides(L, N, P, "zq");
    std::vector<int> num, den;
    for (int j = 1; j <= L; ++j)
        for (int k = 1; k <= N; ++k) {
            num.push_back(P + j + k - 1);
            den.push_back(j + k - 1);
        }
    return detail::cyclotomic_ratio(std::move(num), std::move(den));
}

/// MacMahon's count A(L, N, P) of plane partitions in the L x N x P box.
inline BigInt macmahon(int L, int N, int P) {
    detail::require_sides(L, N, P, "macmahon");
    BigInt num = 1, den = 1;
    for (int j = 1; j <= L; ++j)
        for (int k = 1; k <= N; ++k) {
            num *= P + j + k - 1;
            den *= j + k - 1;
        }
    return exact_div(num, den);
}

/// Generating function of column-strict plane partitions in the N x N x P box.
inline LaurentPoly zq_cspp(int N, int P) {
    detail::require_cspp_domain(N, P, "zq_cspp");
    std::vector<int> num, den;
    for (int k = 1; k <= N; ++k)
        for (int j = 1; j <= N; ++j) {
            num.push_back(P + 1 + j - k);
            den.push_back(j + k - 1);
        }
    const long shift = exact_half(static_cast<long>(N) * N * (N - 1), "zq_cspp volume shift");
    return detail::cyclotomic_ratio(std::move(num), std::move(den)).shifted(static_cast<int>(shift));
}

/// Number of column-strict plane partitions in the N x N x P box.
inline BigInt a_cspp(int N, int P) {
    detail::require_cspp_domain(N, P, "a_cspp");
    BigInt num = 1, den = 1;
    for (int k = 1; k <= N; ++k)
        for (int j = 1; j <= N; ++j) {
            num *= P + 1 + j - k;
            den *= j + k - 1;
        }
    return exact_div(num, den);
}

/// log A^cspp(N, N, P) from the gamma-function product.
inline double log_a_cspp_gamma(int N, int P) {
    detail::require_cspp_domain(N, P, "log_a_cspp_gamma");
    double s = 0.0;
    for (int j = 1; j <= N; ++j)
        s += std::lgamma(j) + std::lgamma(j + P + 1.0) - std::lgamma(j + static_cast<double>(N)) -
             std::lgamma(j + P + 1.0 - N);
    return s;
}

/// A^cspp(N, N, P) from the gamma-function product, rounded to the nearest
/// integer and checked against the exact product.
inline BigInt a_cspp_gamma(int N, int P) {
    const double v = std::exp(log_a_cspp_gamma(N, P));
    if (!(v < 0x1p50)) throw DomainError("a_cspp_gamma: value too large for exact rounding from double");
    const BigInt rounded = static_cast<long long>(std::llround(v));
    if (rounded != a_cspp(N, P)) throw Error("a_cspp_gamma: gamma form disagrees with the exact product");
    return rounded;
}

/// prod_{m<l} (q^{e_m} - q^{e_l}).
inline LaurentPoly vandermonde_q(const std::vector<int>& exponents) {
    std::vector<LaurentPoly> x;
    x.reserve(exponents.size());
    for (int e : exponents) x.push_back(LaurentPoly::monomial(e));
    return vandermonde(x);
}

/// N x N matrix: rows k <= L hold sum_{m=0}^{P} q^{m(j+k-1)}, rows k > L hold
/// q^{j(N-k)} (1-based j, k).
inline Matrix<LaurentPoly> kuperberg_matrix(int L, int N, int P) {
    if (L < 0 || L > N || P < 0) throw DomainError("kuperberg_matrix: need 0 <= L <= N and P >= 0");
    Matrix<LaurentPoly> t(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
    for (int k = 1; k <= N; ++k)
        for (int j = 1; j <= N; ++j) {
            LaurentPoly e;
            if (k <= L) {
                for (int m = 0; m <= P; ++m) e.add_term(m * (j + k - 1), 1);
            } else {
                e = LaurentPoly::monomial(j * (N - k));
            }
            t(k - 1, j - 1) = std::move(e);
        }
    return t;
}

struct PropositionThreeReport {
    int L = 0;
    int N = 0;
    int P = 0;
    /// Whether P/2 < N < P, the range in which the identity is stated.
    bool in_regime = false;
    LaurentPoly det_value;
    LaurentPoly qbd_value;
    LaurentPoly zq_value;
    bool all_equal = false;
};

/// Computes the normalized Kuperberg-type determinant, the normalized
/// q-binomial determinant and Z_q(L, N, P-N+1), and compares them.
inline PropositionThreeReport proposition3(int L, int N, int P) {
    if (L < 0 || L > N) throw DomainError("proposition3: need 0 <= L <= N");
    if (P < N - 1) throw DomainError("proposition3: need P >= N-1");
    const int cP = P - N + 1;
    PropositionThreeReport r;
    r.L = L;
    r.N = N;
    r.P = P;
    r.in_regime = 2 * N > P && N < P;

    std::vector<int> qN(static_cast<std::size_t>(N)), qL(static_cast<std::size_t>(L));
    for (int i = 0; i < N; ++i) qN[i] = i + 1;
    for (int i = 0; i < L; ++i) qL[i] = i;
    const LaurentPoly det = exact_det(kuperberg_matrix(L, N, P));
    const long s1 = exact_half(static_cast<long>(L) * (L - 1) * (N - L), "determinant normalization");
    r.det_value = exact_div(det, vandermonde_q(qN) * vandermonde_q(qL)).shifted(static_cast<int>(-s1));

    IndexTuples t;
    for (int i = 0; i < cP; ++i) {
        t.a.push_back(L + N + i);
        t.b.push_back(L + i);
    }
    const long s2 = exact_half(static_cast<long>(N) * (cP - 1) * cP, "q-binomial determinant normalization");
    r.qbd_value = q_binomial_determinant(t).shifted(static_cast<int>(-s2));

    r.zq_value = zq(L, N, cP);
    r.all_equal = r.det_value == r.qbd_value && r.qbd_value == r.zq_value;
    return r;
}

/// Sum over lambda in the (P-N+1)^L box of S_{lambda-hat}(q, ..., q^N) S_lambda(1, ..., q^{L-1}),
/// by direct summation of Jacobi-Trudi determinants.
inline LaurentPoly sigma_s_bruteforce(int L, int N, int P) {
    if (L < 0 || L > N || P < N - 1) throw DomainError("sigma_s_bruteforce: need 0 <= L <= N, P >= N-1");
    std::vector<LaurentPoly> w, z;
    for (int i = 1; i <= N; ++i) w.push_back(LaurentPoly::monomial(i));
    for (int i = 0; i < L; ++i) z.push_back(LaurentPoly::monomial(i));
    return prop2_sum_bruteforce(P - N + 1, N - L, w, z);
}

/// The same sum as det( q^{(i-j)(i-j+1)/2} [L+N choose N-i+j] ) of size P-N+1.
inline LaurentPoly sigma_s_toeplitz(int L, int N, int P) {
    if (L < 0 || L > N || P < N - 1) throw DomainError("sigma_s_toeplitz: need 0 <= L <= N, P >= N-1");
    const int cP = P - N + 1;
    Matrix<LaurentPoly> m(static_cast<std::size_t>(cP), static_cast<std::size_t>(cP));
    for (int i = 1; i <= cP; ++i)
        for (int j = 1; j <= cP; ++j) {
            const long d = i - j;
            m(i - 1, j - 1) = q_binomial(L + N, N - i + j).shifted(static_cast<int>(exact_half(d * (d + 1))));
        }
    return exact_det(m);
}

/// The same sum as q^{-N(P'-1)P'/2} times the q-binomial determinant with
/// a = (L+N, ..., L+N+P'-1), b = (L, ..., L+P'-1), P' = P-N+1.
inline LaurentPoly sigma_s_closed(int L, int N, int P) {
    if (L < 0 || L > N || P < N - 1) throw DomainError("sigma_s_closed: need 0 <= L <= N, P >= N-1");
    const int cP = P - N + 1;
    IndexTuples t;
    for (int i = 0; i < cP; ++i) {
        t.a.push_back(L + N + i);
        t.b.push_back(L + i);
    }
    return q_binomial_determinant(t).shifted(static_cast<int>(-exact_half(static_cast<long>(N) * (cP - 1) * cP)));
}

} // namespace xx0

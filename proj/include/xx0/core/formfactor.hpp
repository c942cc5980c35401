// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Scalar products and form-factors. Points are passed squared: w stands for
// v^{-2} (the conjugate state) and z for u^2 (the state).

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "xx0/core/bethe.hpp"
#include "xx0/errors.hpp"
#include "xx0/matrix.hpp"
#include "xx0/schur.hpp"

namespace xx0 {

/// <Psi(v)|Psi(u)> = det(T) / (V(w) V(z)), T_kj = sum_{m=0}^{M} (z_k w_j)^m.
template <class T>
T scalar_product(const PointVector<T>& w, const PointVector<T>& z, int M) {
    const int N = static_cast<int>(z.size());
    if (w.size() != z.size()) throw DomainError("scalar_product: w and z must have equal length");
    ChainParams{M, N}.validate();
    return binet_cauchy_kernel(M + 1 - N, 0, w, z);
}

/// <Psi(v)| Pi_n |Psi(u)>, the projection onto states with sites 0..n-1 up:
/// the restricted sum P_{K/n}(w, z). Zero when n > K.
template <class T>
T ferro_formfactor(const PointVector<T>& w, const PointVector<T>& z, int n, int M) {
    const int N = static_cast<int>(z.size());
    if (w.size() != z.size()) throw DomainError("ferro_formfactor: w and z must have equal length");
    ChainParams{M, N}.validate();
    if (n < 0) throw DomainError("ferro_formfactor: n must be non-negative");
    const int K = M + 1 - N;
    if (n > K) return T{};
    return binet_cauchy_kernel(K, n, w, z);
}

/// <Psi(v)| F_n |Psi(u)> with w of length N and z of length N-n:
/// det(T-bar) / (V(z) V(w)).
template <class T>
T domain_wall_formfactor(const PointVector<T>& w, const PointVector<T>& z, int n, int M) {
    const int N = static_cast<int>(w.size());
    ChainParams{M, N}.validate();
    if (n < 0 || n > N) throw DomainError("domain_wall_formfactor: need 0 <= n <= N");
    if (z.size() != static_cast<std::size_t>(N - n)) throw DomainError("domain_wall_formfactor: z must have N-n coordinates");
    return prop2_determinant(M + 1 - N, n, w, z);
}

/// Emptiness formation probability det(1 - K_n) on a Bethe state, with
/// K_n(a, b) = e^{i(n-1)(a-b)/2} sin(n(a-b)/2) / ((M+1) sin((a-b)/2)).
inline double efp_formfactor(const BetheState& s, int n) {
    const int M = s.M();
    if (n < 0 || n > M + 1) throw DomainError("efp_formfactor: need 0 <= n <= M+1");
    const auto& th = s.roots();
    const std::size_t N = th.size();
    if (n == 0 || N == 0) return 1.0;
    Matrix<Complex> a(N, N);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t j = 0; j < N; ++j) {
            Complex kern;
            if (k == j) {
                kern = static_cast<double>(n) / (M + 1);
            } else {
                const double d = th[k] - th[j];
                kern = std::polar(1.0, (n - 1) * d / 2.0) * std::sin(n * d / 2.0) / ((M + 1) * std::sin(d / 2.0));
            }
            a(k, j) = (k == j ? 1.0 : 0.0) - kern;
        }
    return lu_determinant(a).value.real();
}

} // namespace xx0

// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "xx0/core/bethe.hpp"
#include "xx0/core/formfactor.hpp"
#include "xx0/core/walker.hpp"
#include "xx0/errors.hpp"
#include "xx0/matrix.hpp"
#include "xx0/schur.hpp"

namespace xx0 {

enum class Method { determinant, spectral_sum, oracle };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::determinant: return "determinant";
        case Method::spectral_sum: return "spectral_sum";
        case Method::oracle: return "oracle";
    }
    return "unknown";
}

struct CorrelatorResult {
    Complex value;
    Method method = Method::determinant;
    int M = 0;
    int N = 0;
    int n = 0;
    Complex beta;
    std::vector<std::string> warnings;
};

namespace detail {

inline void note_condition(CorrelatorResult& r, const LuDeterminant& d) {
    if (d.pivot_ratio > kConditionWarningRatio) {
        std::ostringstream os;
        os << "ill-conditioned determinant (pivot ratio " << d.pivot_ratio << ")";
        r.warnings.push_back(os.str());
    }
}

inline CorrelatorResult make_result(Method m, int M, int N, int n, Complex beta, Complex value) {
    CorrelatorResult r;
    r.value = value;
    r.method = m;
    r.M = M;
    r.N = N;
    r.n = n;
    r.beta = beta;
    return r;
}

} // namespace detail

/// Persistence of the ferromagnetic string: the thermal average, over the
/// N-particle ground state, of the probability that sites 0..n-1 stay up.
inline CorrelatorResult persistence_ferro(int M, int N, int n, Complex beta, Method method = Method::determinant,
                                          std::size_t budget = kBetheStateBudget) {
    ChainParams{M, N}.validate();
    if (n < 0 || n > M + 1) throw DomainError("persistence_ferro: need 0 <= n <= M+1");
    if (method == Method::oracle) throw DomainError("persistence_ferro: the oracle path lives in edoracle");
    if (n == 0 || N == 0) return detail::make_result(method, M, N, n, beta, 1.0);
    // No room for N down spins on the M+1-n remaining sites.
    if (N > M + 1 - n) return detail::make_result(method, M, N, n, beta, 0.0);

    const BetheState g = ground_state(M, N);
    const double Eg = energy(g);
    const double sites = M + 1;

    if (method == Method::determinant) {
        const AmplitudeTable F(M, N, beta);
        const auto& th = g.roots();
        const std::size_t Nz = th.size();
        std::vector<std::vector<Complex>> ph(Nz, std::vector<Complex>(static_cast<std::size_t>(M + 1)));
        for (std::size_t i = 0; i < Nz; ++i)
            for (int k = 0; k <= M; ++k) ph[i][k] = std::polar(1.0, k * th[i]);
        Matrix<Complex> a(Nz, Nz);
        for (std::size_t i = 0; i < Nz; ++i)
            for (std::size_t j = 0; j < Nz; ++j) {
                Complex s = 0.0;
                for (int k = n; k <= M; ++k)
                    for (int l = n; l <= M; ++l) s += F(k, l) * ph[i][l] * std::conj(ph[j][k]);
                a(i, j) = s;
            }
        const LuDeterminant d = lu_determinant(a);
        auto r = detail::make_result(method, M, N, n, beta,
                                     std::exp(beta * Eg) / std::pow(sites, N) * d.value);
        detail::note_condition(r, d);
        return r;
    }

    const auto zg = g.exp_roots();
    Complex total = 0.0;
    for (const BetheState& s : enumerate_bethe_states(M, N, budget)) {
        const Complex amp = vandermonde(s.exp_roots()) * ferro_formfactor(s.exp_neg_roots(), zg, n, M);
        total += std::exp(-beta * (energy(s) - Eg)) * std::norm(amp);
    }
    return detail::make_result(method, M, N, n, beta, total / (norm_squared(g) * std::pow(sites, N)));
}

/// Persistence of the domain wall: the thermal amplitude for flipping sites
/// 0..n-1 down on top of the (N-n)-particle ground state, normalized by the
/// (N-n)-particle thermal weight.
inline CorrelatorResult persistence_domain_wall(int M, int N, int n, Complex beta, Method method = Method::determinant,
                                                std::size_t budget = kBetheStateBudget) {
    ChainParams{M, N}.validate();
    if (n < 0 || n > N) throw DomainError("persistence_domain_wall: need 0 <= n <= N");
    if (method == Method::oracle) throw DomainError("persistence_domain_wall: the oracle path lives in edoracle");
    if (n == 0) return detail::make_result(method, M, N, n, beta, 1.0);

    const int Nn = N - n;
    const BetheState g = ground_state(M, Nn);
    const double Eg = energy(g);
    const double sites = M + 1;
    const auto z = g.exp_roots();
    const auto w = g.exp_neg_roots();

    if (method == Method::determinant) {
        const AmplitudeTable F(M, N, beta);
        const std::size_t Nt = static_cast<std::size_t>(N);
        const std::size_t Na = static_cast<std::size_t>(Nn);
        std::vector<std::vector<Complex>> zp(Na, std::vector<Complex>(static_cast<std::size_t>(M + 1)));
        std::vector<std::vector<Complex>> wp(Na, std::vector<Complex>(static_cast<std::size_t>(M + 1)));
        for (std::size_t i = 0; i < Na; ++i) {
            Complex a = 1.0, b = 1.0;
            for (int l = 0; l <= M; ++l) {
                zp[i][l] = a;
                wp[i][l] = b;
                a *= z[i];
                b *= w[i];
            }
        }
        Matrix<Complex> m(Nt, Nt);
        for (std::size_t i = 0; i < Na; ++i) {
            for (std::size_t j = 0; j < Na; ++j) {
                Complex s = 0.0;
                for (int k = 0; k <= M; ++k)
                    for (int l = 0; l <= M; ++l) s += F(k, l) * zp[i][l] * wp[j][k];
                m(i, j) = s;
            }
            for (int j = 1; j <= n; ++j) {
                Complex s = 0.0;
                for (int l = 0; l <= M; ++l) s += F(n - j, l) * zp[i][l];
                m(i, Na + j - 1) = s;
            }
        }
        for (int i = 1; i <= n; ++i) {
            for (std::size_t j = 0; j < Na; ++j) {
                Complex s = 0.0;
                for (int l = 0; l <= M; ++l) s += F(l, n - i) * wp[j][l];
                m(Na + i - 1, j) = s;
            }
            for (int j = 1; j <= n; ++j) m(Na + i - 1, Na + j - 1) = F(n - i, n - j);
        }
        const LuDeterminant d = lu_determinant(m);
        auto r = detail::make_result(method, M, N, n, beta, std::exp(beta * Eg) / std::pow(sites, Nn) * d.value);
        detail::note_condition(r, d);
        return r;
    }

    Complex total = 0.0;
    for (const BetheState& s : enumerate_bethe_states(M, N, budget)) {
        const Complex amp = vandermonde(s.exp_roots()) * prop2_sum_bruteforce(M + 1 - N, n, s.exp_neg_roots(), z);
        total += std::exp(-beta * (energy(s) - Eg)) * std::norm(amp);
    }
    return detail::make_result(method, M, N, n, beta, total / (norm_squared(g) * std::pow(sites, N)));
}

} // namespace xx0
